#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidcert/perm.hpp"
#include "braidcert/word.hpp"

namespace braidcert {

// A finite presentation. Relators are free-mode reduced words; groups whose
// generators are involutions carry explicit square relators.
struct Presentation {
  AlphabetPtr alphabet;
  std::vector<Word> relators;
};

// Text format, line oriented; "#" starts a comment, blank lines are skipped:
//   gens: <name> <name> ...
//   rel: <word>
//   rel: <word>
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);

// The same group with extra relators appended (no simplification).
Presentation quotient(const Presentation& p, const std::vector<Word>& extra);

// The one-relator group <a1, a2 | a1^p a2^q> for coprime p, q >= 2, together
// with the distinguished peripheral words
//   meridian  = a1^-1 a2^-1
//   longitude = (a2 a1)^(p*q) a1^-p
// Only (3,4) is exercised end to end by the bundled checks; other coprime
// pairs are validated through the abelianization identities alone.
struct TorusKnotGroup {
  Presentation group;
  Word meridian;
  Word longitude;
};
TorusKnotGroup torus_knot_group(int p, int q);

// Left-to-right product of the letter images: word_image(w1 w2) =
// word_image(w1) * word_image(w2) with (p * q)(x) = q(p(x)).
Perm word_image(const Word& w, const std::vector<Perm>& images);

// Result of checking a homomorphism candidate against a presentation.
struct HomVerification {
  bool ok;
  int failing_relator;  // index of the first relator that fails; -1 if ok
};

// Does generator -> images[g] kill every relator?
HomVerification verify_hom(const Presentation& p, const std::vector<Perm>& images);
// Same, with word images in a free or involutory target (a relator passes
// when its image reduces to the identity).
HomVerification verify_hom(const Presentation& p, const std::vector<Word>& images);

}  // namespace braidcert
