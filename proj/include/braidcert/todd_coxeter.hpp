#pragma once

#include <vector>

#include "braidcert/perm.hpp"
#include "braidcert/presentation.hpp"

namespace braidcert {

inline constexpr long kDefaultMaxCosets = 100000;

// Outcome of a coset enumeration. LimitExceeded means the enumeration was cut
// off at the coset limit; it says nothing about the index being infinite.
struct EnumResult {
  enum class Status { Finite, LimitExceeded };

  Status status;
  long coset_count;    // index when Finite; live cosets at cutoff otherwise
  long cosets_defined; // total cosets ever defined, including later-merged ones
  long max_live;       // peak number of simultaneously live cosets

  // One permutation of {1..coset_count} per generator (right multiplication
  // on cosets). Populated only when Finite. Coset 1 is the subgroup itself.
  std::vector<Perm> actions;

  bool finite() const { return status == Status::Finite; }
};

// Coset enumeration of <subgroup_gens> in the presented group, HLT style:
// relators are scanned and filled coset by coset in definition order, and
// coincidences are processed immediately through a union-find of coset
// representatives. Fully deterministic. Words in `subgroup_gens` must be
// free-mode words over the presentation's alphabet.
EnumResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                        long max_cosets = kDefaultMaxCosets);

// Order of the element represented by `w`, computed from the regular action
// of a trivial-subgroup enumeration. Throws LimitError when that enumeration
// does not close within max_cosets.
long long element_order(const Presentation& p, const Word& w, long max_cosets = kDefaultMaxCosets);

// Orders of all elements of the presented group (index 0 is the identity),
// from the regular action of a trivial-subgroup enumeration. Throws
// LimitError when the enumeration does not close.
std::vector<long long> element_orders(const Presentation& p, long max_cosets = kDefaultMaxCosets);

// Applies one letter / a whole word to a coset through the enumerated action.
int coset_apply(const EnumResult& table, int coset, const Word& w);

}  // namespace braidcert
