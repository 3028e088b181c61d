#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidcert/errors.hpp"

namespace braidcert {

// A permutation of {1, ..., n}. Composition is left-to-right everywhere:
// (p * q)(x) = q(p(x)).
class Perm {
 public:
  static Perm identity(int degree);
  // One-line images: images[i] is the image of point i+1 (1-based values).
  static Perm from_images(std::vector<int> images);
  static Perm transposition(int degree, int a, int b);
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const;  // 1-based point
  bool is_identity() const;

  Perm compose(const Perm& then) const;  // left-to-right: *this first, `then` second
  Perm inverse() const;
  long long order() const;

  // Nontrivial cycles, each rotated to start at its minimum, sorted by minimum.
  std::vector<std::vector<int>> cycles() const;

  friend Perm operator*(const Perm& p, const Perm& q) { return p.compose(q); }
  friend bool operator==(const Perm&, const Perm&) = default;
  // Lexicographic order on the one-line image sequence: the fixed total order
  // used for deterministic enumeration.
  friend bool operator<(const Perm& p, const Perm& q) { return p.img_ < q.img_; }

 private:
  explicit Perm(std::vector<int> zero_based) : img_(std::move(zero_based)) {}
  std::vector<int> img_;  // 0-based internally
};

// Cycle notation: "(1 2)(3 4)"; the identity prints as "()".
std::string print_perm(const Perm& p);
Perm parse_perm(std::string_view text, int degree);

// Order of the subgroup generated by `gens`, by breadth-first closure.
// All generators must share one degree; guarded to degree <= 10.
std::size_t brute_force_order(const std::vector<Perm>& gens);

}  // namespace braidcert
