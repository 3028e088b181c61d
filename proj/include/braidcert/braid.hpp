#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidcert/perm.hpp"
#include "braidcert/word.hpp"

namespace braidcert {

// One Artin generator s<index> (1 <= index < strands) or its inverse.
struct BraidLetter {
  int index;
  int sign;  // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// A braid word on a fixed strand count. Letters are stored in written order;
// when a braid acts, the RIGHTMOST letter acts first (the leftmost is the
// outermost map).
class BraidWord {
 public:
  BraidWord(int strands, std::vector<BraidLetter> letters);
  static BraidWord identity(int strands) { return BraidWord(strands, {}); }

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool is_empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

// Braid syntax: whitespace-separated terms "s<i>" with optional "^<int>",
// e.g. "s1^2 s3 s2 s3^-1 s1^-2".
BraidWord parse_braid(std::string_view text, int strands);
// Prints with run-length exponents, so parse_braid(print_braid(b)) == b.
std::string print_braid(const BraidWord& b);

// The standard loop alphabet {g1, ..., gn} the braid group acts on.
AlphabetPtr loop_alphabet(int n);

// A based path: a loop prefix (over the loop alphabet) followed by the
// straight arc to puncture `terminal` (1-based).
struct BasedPath {
  Word prefix;
  int terminal;
  friend bool operator==(const BasedPath&, const BasedPath&) = default;
};

BasedPath base_path(int strands, int terminal, WordMode mode = WordMode::Free);
// "<prefix> rho<j>", or "rho<j>" when the prefix is empty.
std::string print_path(const BasedPath& p);

// Artin action on a loop word, one braid letter at a time (rightmost first):
//   s_i:    g_i -> g_i g_{i+1} g_i^-1,   g_{i+1} -> g_i
//   s_i^-1: g_i -> g_{i+1},              g_{i+1} -> g_{i+1}^-1 g_i g_{i+1}
// The result is reduced in `out_mode`.
Word act_on_loop(const BraidWord& b, const Word& w, WordMode out_mode);

// The disk reflection on loops, g_i -> g_{n+1-i} letterwise. Involutory words
// only: the reflection reverses loop orientations, which involutory reduction
// absorbs.
Word reflect_loop(const Word& w);

// Braid action on based paths (rightmost letter first):
//   s_i:    rho_i -> g_i rho_{i+1},      rho_{i+1} -> rho_i
//   s_i^-1: rho_i -> rho_{i+1},          rho_{i+1} -> g_{i+1}^-1 rho_i
// The prefix is reduced in `out_mode`.
BasedPath act_on_path(const BraidWord& b, const BasedPath& p, WordMode out_mode);

// Reflection on based paths: prefix reflected, terminal j -> n+1-j.
BasedPath reflect_path(const BasedPath& p);

// The involutory loop image of g_i under the braid action followed by the
// reflection (the "reflected action" on loop generators).
Word reflected_loop_action(const BraidWord& b, int gamma_index);

// Permutation of the punctures {1..n} induced by the braid (rightmost letter
// first), optionally post-composed with the reflection i -> n+1-i.
Perm induced_permutation(const BraidWord& b, bool with_reflection);

}  // namespace braidcert
