#pragma once

#include <optional>
#include <vector>

#include "braidcert/braid.hpp"
#include "braidcert/hom_search.hpp"
#include "braidcert/word.hpp"

#include "json.hpp"

namespace braidcert {

// The involutory prefix words delta_i: for each puncture i, the image of the
// based path rho_i under the braid action followed by the reflection, with
// the terminal arc stripped. One word per strand.
std::vector<Word> delta_words(const BraidWord& b);

// The product of the delta words along the orbit of puncture 1 under the
// reflected strand permutation: delta_{i0} delta_{i1} ... with i0 = 1,
// i_{k+1} = perm(i_k). Empty result when that permutation is not transitive.
std::optional<Word> f_word(const BraidWord& b);

// A checked homomorphism certificate for one braid. `images` sends the loop
// generators to permutations; the flags record the four certificate
// conditions and are recomputable from the braid and the images.
struct BraidCertificate {
  BraidWord braid;
  int degree;
  std::vector<Perm> images;

  Word f;  // image of the f-word construction (identity when not transitive)
  Word u;  // product of all loop generators
  Word a;  // first loop generator

  bool transitive;                // reflected strand permutation is transitive
  bool relators_killed;           // images kill g_i^2 and g_i * reflected(g_i)
  bool klein_four_fa;             // <image(f), image(a)> is a Klein four-group
  bool u_nontrivial_involution;   // image(u) is a nontrivial involution

  bool valid() const {
    return transitive && relators_killed && klein_four_fa && u_nontrivial_involution;
  }

  nlohmann::ordered_json to_json() const;
};

// Evaluates all four certificate conditions for the given braid and images.
// Images must be involutions or the identity, one per strand.
BraidCertificate check_certificate(const BraidWord& b, const std::vector<Perm>& images);

// All VALID certificates at one fixed degree, in search order.
std::vector<BraidCertificate> valid_certificates(const BraidWord& b, int degree);

// Searches degrees 2..degree_max in order and returns the first VALID
// certificate. std::nullopt means no certificate was found in that range --
// an inconclusive outcome, not a disproof.
std::optional<BraidCertificate> certify_braid(const BraidWord& b, int degree_max = 4);

// --- Infinite-order certificates through affine maps of the integer line ---

// x -> sign*x + shift with sign in {+1, -1}. Composes left to right.
struct AffineMap {
  long long sign = 1;
  long long shift = 0;

  long long apply(long long x) const { return sign * x + shift; }
  AffineMap compose(const AffineMap& then) const {
    return AffineMap{sign * then.sign, then.sign * shift + then.shift};
  }
  AffineMap inverse() const { return AffineMap{sign, -sign * shift}; }
  bool is_identity() const { return sign == 1 && shift == 0; }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// The alphabet {u1p, u2p, vp} of the peripheral group
//   <u1p, u2p, vp | u1p^2, u2p^2, vp^2, [u1p,vp], [u2p,vp]>.
AlphabetPtr peripheral_alphabet();

// The fixed affine representation u1p -> (x -> -x), u2p -> (x -> 2-x),
// vp -> identity, evaluated on a word over the peripheral alphabet.
AffineMap peripheral_affine_image(const Word& w);

struct TranslationWitness {
  bool is_translation;        // false: the image is a reflection (order <= 2)
  long long translation_length;  // |shift| when is_translation, else 0
};

// A nonzero translation length certifies that the element has infinite order
// (so the peripheral group is infinite). A reflection image is inconclusive.
TranslationWitness infinite_order_certificate(const Word& w);

}  // namespace braidcert
