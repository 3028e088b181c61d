#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"

#include "braidcert/checks.hpp"
#include "braidcert/todd_coxeter.hpp"
#include "braidcert/word_io.hpp"

using namespace braidcert;

namespace {

struct CorpusEntry {
  std::string name;
  Presentation presentation;
  std::vector<Perm> frozen_rep;  // a faithful permutation representation
};

// Finite groups with independently chosen faithful permutation
// representations; the breadth-first closure of the representation is the
// oracle the enumerator must agree with.
std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  out.push_back({"S3", parse_presentation("gens: x y\nrel: x^2\nrel: y^2\nrel: (x y)^3\n"),
                 {Perm::from_cycles(3, {{1, 2}}), Perm::from_cycles(3, {{2, 3}})}});
  out.push_back({"C6", parse_presentation("gens: t\nrel: t^6\n"),
                 {Perm::from_cycles(6, {{1, 2, 3, 4, 5, 6}})}});
  out.push_back({"C2xC2", parse_presentation("gens: x y\nrel: x^2\nrel: y^2\nrel: (x y)^2\n"),
                 {Perm::from_cycles(4, {{1, 2}}), Perm::from_cycles(4, {{3, 4}})}});
  out.push_back({"D4", parse_presentation("gens: r s\nrel: r^4\nrel: s^2\nrel: (r s)^2\n"),
                 {Perm::from_cycles(4, {{1, 2, 3, 4}}), Perm::from_cycles(4, {{1, 3}})}});
  out.push_back({"Q8",
                 parse_presentation("gens: x y\nrel: x^4\nrel: x^2 y^-2\nrel: y^-1 x y x\n"),
                 {Perm::from_cycles(8, {{1, 2, 3, 4}, {5, 8, 7, 6}}),
                  Perm::from_cycles(8, {{1, 5, 3, 7}, {2, 6, 4, 8}})}});
  out.push_back({"S4", parse_presentation("gens: a b\nrel: a^2\nrel: b^4\nrel: (a b)^3\n"),
                 {Perm::from_cycles(4, {{1, 2}}), Perm::from_cycles(4, {{1, 2, 3, 4}})}});
  return out;
}

Presentation t34_quotient() {
  TorusKnotGroup t = torus_knot_group(3, 4);
  return quotient(t.group, {t.meridian * t.meridian, t.longitude * t.longitude});
}

}  // namespace

TEST_CASE("enumerated indices agree with the brute-force oracle on the corpus") {
  for (const CorpusEntry& entry : corpus()) {
    CAPTURE(entry.name);
    // The frozen representation really does satisfy the presented relations.
    CHECK(verify_hom(entry.presentation, entry.frozen_rep).ok);
    const std::size_t oracle = brute_force_order(entry.frozen_rep);

    EnumResult r = todd_coxeter(entry.presentation, {});
    REQUIRE(r.finite());
    CHECK(static_cast<std::size_t>(r.coset_count) == oracle);
    CHECK(r.cosets_defined >= r.coset_count);
    CHECK(r.max_live <= r.cosets_defined);

    // The regular action the enumerator returns satisfies the relators too.
    CHECK(verify_hom(entry.presentation, r.actions).ok);
    // And it is transitive of full degree: generator words reach every coset.
    // (The closure oracle is guarded to degree <= 10, so skip the big groups.)
    if (r.coset_count <= 10)
      CHECK(brute_force_order(r.actions) >= static_cast<std::size_t>(r.coset_count));
  }
}

TEST_CASE("the enumeration is deterministic") {
  Presentation p = parse_presentation("gens: a b\nrel: a^2\nrel: b^4\nrel: (a b)^3\n");
  EnumResult first = todd_coxeter(p, {});
  EnumResult second = todd_coxeter(p, {});
  CHECK(first.coset_count == second.coset_count);
  CHECK(first.cosets_defined == second.cosets_defined);
  CHECK(first.max_live == second.max_live);
  REQUIRE(first.actions.size() == second.actions.size());
  for (std::size_t g = 0; g < first.actions.size(); ++g)
    CHECK(first.actions[g] == second.actions[g]);
}

TEST_CASE("subgroup enumeration computes coset indices") {
  Presentation s4 = parse_presentation("gens: a b\nrel: a^2\nrel: b^4\nrel: (a b)^3\n");
  Word b = parse_word("b", s4.alphabet, WordMode::Free);
  EnumResult r = todd_coxeter(s4, {b});
  REQUIRE(r.finite());
  CHECK(r.coset_count == 6);  // |S4| / |<b>| = 24 / 4

  Word a = parse_word("a", s4.alphabet, WordMode::Free);
  CHECK(todd_coxeter(s4, {a, b}).coset_count == 1);  // a and b generate

  Presentation c6 = parse_presentation("gens: t\nrel: t^6\n");
  Word t2 = parse_word("t^2", c6.alphabet, WordMode::Free);
  CHECK(todd_coxeter(c6, {t2}).coset_count == 2);

  // The first coset is fixed exactly by subgroup elements.
  CHECK(coset_apply(r, 1, b) == 1);
  CHECK(coset_apply(r, 1, a) != 1);
}

TEST_CASE("coincidence collapse handles non-obvious trivial groups") {
  // x^3 = x^5 = e forces x = e.
  Presentation p = parse_presentation("gens: x\nrel: x^3\nrel: x^5\n");
  EnumResult r = todd_coxeter(p, {});
  REQUIRE(r.finite());
  CHECK(r.coset_count == 1);
  CHECK(r.cosets_defined > 1);  // cosets were defined, then all merged away
  for (const Perm& act : r.actions) CHECK(act.is_identity());

  // An asymmetric collapse: <x, y | x^2, y^3, x y> forces x = y^-1, so
  // x^2 = y^-2 and y^3 = e give y = e, hence the trivial group again.
  Presentation q = parse_presentation("gens: x y\nrel: x^2\nrel: y^3\nrel: x y\n");
  CHECK(todd_coxeter(q, {}).coset_count == 1);
}

TEST_CASE("the order-48 quotient closes fast and small") {
  EnumResult r = todd_coxeter(t34_quotient(), {});
  REQUIRE(r.finite());
  CHECK(r.coset_count == 48);
  CHECK(r.cosets_defined <= 5000);
}

TEST_CASE("peripheral elements have order 2 in the order-48 quotient") {
  TorusKnotGroup t = torus_knot_group(3, 4);
  Presentation g = t34_quotient();
  CHECK(element_order(g, t.meridian) == 2);
  CHECK(element_order(g, t.longitude) == 2);
  CHECK(element_order(g, t.longitude * t.meridian) == 2);
  CHECK(element_order(g, Word::identity(g.alphabet, WordMode::Free)) == 1);
  // mu and lambda are distinct involutions: their product is not trivial and
  // the four elements {e, mu, lambda, lambda mu} are pairwise distinct.
  EnumResult r = todd_coxeter(g, {});
  Perm pm = word_image(t.meridian, r.actions);
  Perm pl = word_image(t.longitude, r.actions);
  CHECK(!pm.is_identity());
  CHECK(!pl.is_identity());
  CHECK(!(pm == pl));
  CHECK(!(pm * pl).is_identity());
}

TEST_CASE("element order profiles identify small groups") {
  auto profile = [](const Presentation& p) {
    std::map<long long, int> hist;
    for (long long o : element_orders(p)) ++hist[o];
    return hist;
  };
  // Q8: identity, one central involution, six elements of order 4.
  CHECK(profile(parse_presentation("gens: x y\nrel: x^4\nrel: x^2 y^-2\nrel: y^-1 x y x\n")) ==
        std::map<long long, int>{{1, 1}, {2, 1}, {4, 6}});
  // D4: identity, five involutions, two rotations of order 4.
  CHECK(profile(parse_presentation("gens: r s\nrel: r^4\nrel: s^2\nrel: (r s)^2\n")) ==
        std::map<long long, int>{{1, 1}, {2, 5}, {4, 2}});
  // C6.
  CHECK(profile(parse_presentation("gens: t\nrel: t^6\n")) ==
        std::map<long long, int>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
}

TEST_CASE("the parity family behind the order-4 quotients") {
  for (int k = 0; k <= 3; ++k) {
    CAPTURE(k);
    Presentation g = klein_group_presentation(k);
    Word v2 = Word::generator(g.alphabet, WordMode::Free, 0);
    Word w2 = Word::generator(g.alphabet, WordMode::Free, 2);
    for (const Word& killer : {w2, v2 * w2}) {
      std::vector<long long> orders = element_orders(quotient(g, {killer}));
      CHECK(orders.size() == 4);
      long long max_order = *std::max_element(orders.begin(), orders.end());
      CHECK(max_order == (k % 2 == 0 ? 2 : 4));
    }
  }
}

TEST_CASE("hitting the coset limit is reported, not fatal") {
  Presentation z = parse_presentation("gens: t\n");  // the infinite cyclic group
  EnumResult r = todd_coxeter(z, {}, 50);
  CHECK(!r.finite());
  CHECK(r.status == EnumResult::Status::LimitExceeded);
  CHECK(r.cosets_defined <= 50);
  CHECK(r.actions.empty());

  Word t = parse_word("t", z.alphabet, WordMode::Free);
  CHECK_THROWS_AS(element_order(z, t, 50), LimitError);
  CHECK_THROWS_AS(element_orders(z, 50), LimitError);

  // The parity-family group itself is infinite; only its quotients close.
  CHECK(!todd_coxeter(klein_group_presentation(0), {}, 2000).finite());

  // A finite group under a limit too small to close is also inconclusive.
  Presentation s4 = parse_presentation("gens: a b\nrel: a^2\nrel: b^4\nrel: (a b)^3\n");
  CHECK(!todd_coxeter(s4, {}, 3).finite());
}

TEST_CASE("subgroup words are validated") {
  Presentation p = parse_presentation("gens: x\nrel: x^2\n");
  auto other = Alphabet::make({"z"});
  CHECK_THROWS_AS(todd_coxeter(p, {Word::generator(other, WordMode::Free, 0)}), AlphabetError);
  CHECK_THROWS_AS(todd_coxeter(p, {Word::generator(p.alphabet, WordMode::Involutory, 0)}),
                  AlphabetError);
}
