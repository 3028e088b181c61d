#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidcert/errors.hpp"

namespace braidcert {

// Reduction/equality semantics for words.
//   Free:       no relations between generators; letters carry signs.
//   Involutory: every generator squares to the identity; signs are dropped,
//               adjacent equal letters cancel.
enum class WordMode { Free, Involutory };

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

// An ordered family of named generators. Immutable once built.
//
// Names must match the word grammar's generator token (a letter followed by
// letters/digits). "e" is reserved for the empty word and rejected.
class Alphabet {
 public:
  static AlphabetPtr make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> find(std::string_view name) const;
  // Like find(), but throws AlphabetError for unknown names.
  int id_of(std::string_view name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  explicit Alphabet(std::vector<std::string> names);

  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> ids_;
};

struct Letter {
  int gen;   // alphabet id
  int sign;  // +1 or -1; always +1 inside involutory words
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A reduced word over an alphabet. Immutable: every operation returns a new
// value, and every constructed Word is already reduced for its mode.
class Word {
 public:
  static Word identity(AlphabetPtr alphabet, WordMode mode);
  static Word generator(AlphabetPtr alphabet, WordMode mode, int id, int sign = 1);
  // Reduces an arbitrary letter sequence in a single left-to-right stack pass.
  static Word reduce(AlphabetPtr alphabet, WordMode mode, std::vector<Letter> letters);

  WordMode mode() const { return mode_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;
  // Reinterprets the word in another mode. Free -> Involutory is the quotient
  // map (signs dropped, then reduced); Involutory -> Free lifts letters with
  // sign +1.
  Word in_mode(WordMode target) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b);
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  Word(AlphabetPtr alphabet, WordMode mode, std::vector<Letter> letters);

  AlphabetPtr alphabet_;
  WordMode mode_;
  std::vector<Letter> letters_;
};

// Homomorphic image of w: letter with id g maps to images[g] (inverted for
// sign -1). All images must share one target alphabet and mode.
Word substitute(const Word& w, const std::vector<Word>& images);

// Signed exponent sum per generator. Free mode only.
std::vector<long long> exponent_vector(const Word& w);

}  // namespace braidcert
