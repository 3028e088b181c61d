#include "braidcert/certify.hpp"

#include <cstdlib>

#include "braidcert/word_io.hpp"

namespace braidcert {

namespace {

// Orbit of point 1 under p, in visit order.
std::vector<int> orbit_of_one(const Perm& p) {
  std::vector<int> orbit{1};
  int x = p.apply(1);
  while (x != 1) {
    orbit.push_back(x);
    x = p.apply(x);
  }
  return orbit;
}

Word boundary_word(int strands) {
  const auto alpha = loop_alphabet(strands);
  std::vector<Letter> letters;
  for (int g = 0; g < strands; ++g) letters.push_back({g, 1});
  return Word::reduce(alpha, WordMode::Involutory, std::move(letters));
}

// The presented involutory quotient the certificate homomorphism must factor
// through: square relators plus g_i * reflected(g_i) for every strand.
Presentation certificate_presentation(const BraidWord& b) {
  const auto alpha = loop_alphabet(b.strands());
  std::vector<Word> relators;
  for (int i = 0; i < b.strands(); ++i)
    relators.push_back(Word::reduce(alpha, WordMode::Free, {{i, 1}, {i, 1}}));
  for (int i = 1; i <= b.strands(); ++i) {
    Word g = Word::generator(alpha, WordMode::Free, i - 1);
    relators.push_back(g * reflected_loop_action(b, i).in_mode(WordMode::Free));
  }
  return Presentation{alpha, std::move(relators)};
}

}  // namespace

std::vector<Word> delta_words(const BraidWord& b) {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(b.strands()));
  for (int i = 1; i <= b.strands(); ++i) {
    BasedPath moved = act_on_path(b, base_path(b.strands(), i), WordMode::Involutory);
    out.push_back(reflect_path(moved).prefix);
  }
  return out;
}

std::optional<Word> f_word(const BraidWord& b) {
  const Perm perm = induced_permutation(b, true);
  const std::vector<int> orbit = orbit_of_one(perm);
  if (static_cast<int>(orbit.size()) != b.strands()) return std::nullopt;
  const std::vector<Word> deltas = delta_words(b);
  Word f = Word::identity(loop_alphabet(b.strands()), WordMode::Involutory);
  for (int i : orbit) f = f * deltas[static_cast<std::size_t>(i - 1)];
  return f;
}

BraidCertificate check_certificate(const BraidWord& b, const std::vector<Perm>& images) {
  const int n = b.strands();
  const auto alpha = loop_alphabet(n);
  if (images.size() != static_cast<std::size_t>(n))
    throw AlphabetError("need one image per loop generator");
  const int degree = images.front().degree();
  for (const Perm& p : images)
    if (p.degree() != degree) throw DomainError("permutation degree mismatch");

  const Perm reflected_perm = induced_permutation(b, true);
  const bool transitive = static_cast<int>(orbit_of_one(reflected_perm).size()) == n;

  const bool relators_killed = verify_hom(certificate_presentation(b), images).ok;

  const Word u = boundary_word(n);
  const Word a = Word::generator(alpha, WordMode::Involutory, 0);
  std::optional<Word> f = transitive ? f_word(b) : std::nullopt;

  bool klein_four_fa = false;
  if (f) {
    const Perm o = word_image(*f, images);
    const Perm p = word_image(a, images);
    klein_four_fa = !o.is_identity() && !p.is_identity() && !(o == p) &&
                    (o * o).is_identity() && (p * p).is_identity() && o * p == p * o;
  }

  const Perm q = word_image(u, images);
  const bool u_nontrivial_involution = !q.is_identity() && (q * q).is_identity();

  return BraidCertificate{b,
                          degree,
                          images,
                          f ? *f : Word::identity(alpha, WordMode::Involutory),
                          u,
                          a,
                          transitive,
                          relators_killed,
                          klein_four_fa,
                          u_nontrivial_involution};
}

std::vector<BraidCertificate> valid_certificates(const BraidWord& b, int degree) {
  SearchSpec spec;
  spec.presentation = certificate_presentation(b);
  spec.degree = degree;
  spec.restrict_to_involutions = true;
  spec.require_nontrivial = boundary_word(b.strands());

  std::vector<BraidCertificate> out;
  for (const HomCandidate& candidate : search(spec)) {
    BraidCertificate cert = check_certificate(b, candidate.images);
    if (cert.valid()) out.push_back(std::move(cert));
  }
  return out;
}

std::optional<BraidCertificate> certify_braid(const BraidWord& b, int degree_max) {
  if (degree_max < 2) throw DomainError("degree_max must be at least 2");
  for (int degree = 2; degree <= degree_max; ++degree) {
    std::vector<BraidCertificate> found = valid_certificates(b, degree);
    if (!found.empty()) return found.front();
  }
  return std::nullopt;
}

nlohmann::ordered_json BraidCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["braid"] = print_braid(braid);
  j["strands"] = braid.strands();
  j["degree"] = degree;
  nlohmann::ordered_json imgs = nlohmann::ordered_json::object();
  for (std::size_t g = 0; g < images.size(); ++g)
    imgs[loop_alphabet(braid.strands())->name(static_cast<int>(g))] = print_perm(images[g]);
  j["images"] = imgs;
  j["f_word"] = print_word(f);
  j["u_word"] = print_word(u);
  j["a_word"] = print_word(a);
  j["conditions"] = {{"transitive", transitive},
                     {"relators_killed", relators_killed},
                     {"klein_four_fa", klein_four_fa},
                     {"u_nontrivial_involution", u_nontrivial_involution}};
  j["valid"] = valid();
  return j;
}

AlphabetPtr peripheral_alphabet() {
  static AlphabetPtr alpha = Alphabet::make({"u1p", "u2p", "vp"});
  return alpha;
}

AffineMap peripheral_affine_image(const Word& w) {
  const auto alpha = peripheral_alphabet();
  if (!(w.alphabet() == alpha || *w.alphabet() == *alpha))
    throw AlphabetError("expected a word over the peripheral alphabet {u1p, u2p, vp}");
  const AffineMap images[3] = {{-1, 0}, {-1, 2}, {1, 0}};
  AffineMap acc;
  for (const Letter& l : w.letters()) {
    AffineMap m = images[l.gen];
    acc = acc.compose(l.sign > 0 ? m : m.inverse());
  }
  return acc;
}

TranslationWitness infinite_order_certificate(const Word& w) {
  const AffineMap m = peripheral_affine_image(w);
  if (m.sign == 1) return TranslationWitness{true, std::llabs(m.shift)};
  return TranslationWitness{false, 0};
}

}  // namespace braidcert
