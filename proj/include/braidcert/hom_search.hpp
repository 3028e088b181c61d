#pragma once

#include <optional>
#include <vector>

#include "braidcert/presentation.hpp"

namespace braidcert {

// A homomorphism search problem: enumerate maps generator -> S_degree that
// kill every relator and satisfy the optional constraints.
struct SearchSpec {
  Presentation presentation;
  int degree = 2;
  // Restrict generator images to involutions and the identity.
  bool restrict_to_involutions = false;
  // Keep only candidates under which this word maps to a non-identity element.
  std::optional<Word> require_nontrivial;
  // Keep only candidates under which each of these words has order exactly 2.
  std::vector<Word> require_order_two;
};

struct HomCandidate {
  std::vector<Perm> images;  // one per generator, in alphabet order
};

// All solutions, in lexicographic order of the generator-image tuple (the
// fixed Perm order). Images are assigned in presentation order; a relator is
// checked as soon as all its generators are assigned. Parallel runs return
// the same sequence as serial ones. Degrees are guarded to 1..6.
std::vector<HomCandidate> search(const SearchSpec& spec);

// Single-threaded reference implementation with identical output.
std::vector<HomCandidate> search_serial(const SearchSpec& spec);

// Unpruned brute-force count of relator-killing tuples, for cross-checking
// search() on tiny instances.
long long count_all_homs(const Presentation& p, int degree);

// The image domain used by the search at a given degree: all of S_degree in
// lexicographic order, optionally filtered to involutions and the identity.
std::vector<Perm> image_domain(int degree, bool involutions_only);

}  // namespace braidcert
