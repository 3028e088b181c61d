#include <random>
#include <vector>

#include "doctest.h"

#include "braidcert/word.hpp"
#include "braidcert/word_io.hpp"

using namespace braidcert;

namespace {

// Reduction oracle: repeatedly rescan for one adjacent cancelling pair until
// no pass changes anything. Quadratic, but independent of the single-pass
// stack reduction it cross-checks.
std::vector<Letter> scan_until_stable(WordMode mode, std::vector<Letter> ls) {
  if (mode == WordMode::Involutory)
    for (Letter& l : ls) l.sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      const bool cancels = ls[i].gen == ls[i + 1].gen &&
                           (mode == WordMode::Involutory || ls[i].sign == -ls[i + 1].sign);
      if (cancels) {
        ls.erase(ls.begin() + static_cast<long>(i), ls.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return ls;
}

std::vector<Letter> random_letters(std::mt19937& rng, int ngens, std::size_t len) {
  std::uniform_int_distribution<int> gen(0, ngens - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<Letter> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back({gen(rng), sgn(rng) ? 1 : -1});
  return out;
}

}  // namespace

TEST_CASE("alphabet accepts alphanumeric names and resolves ids") {
  auto alpha = Alphabet::make({"a", "b2", "gamma3"});
  CHECK(alpha->size() == 3);
  CHECK(alpha->name(1) == "b2");
  CHECK(alpha->find("gamma3") == 2);
  CHECK(!alpha->find("missing"));
  CHECK(alpha->id_of("a") == 0);
  CHECK_THROWS_AS(alpha->id_of("missing"), AlphabetError);
}

TEST_CASE("alphabet rejects invalid and duplicate names") {
  CHECK_THROWS_AS(Alphabet::make({"a", "a"}), AlphabetError);
  CHECK_THROWS_AS(Alphabet::make({"e"}), AlphabetError);
  CHECK_THROWS_AS(Alphabet::make({"1a"}), AlphabetError);
  CHECK_THROWS_AS(Alphabet::make({"a-b"}), AlphabetError);
  CHECK_THROWS_AS(Alphabet::make({""}), AlphabetError);
  // Only the exact name "e" is reserved.
  CHECK(Alphabet::make({"ee", "e1"})->size() == 2);
}

TEST_CASE("alphabets compare by name sequence") {
  auto a = Alphabet::make({"x", "y"});
  auto b = Alphabet::make({"x", "y"});
  auto c = Alphabet::make({"y", "x"});
  CHECK(*a == *b);
  CHECK(!(*a == *c));
}

TEST_CASE("free reduction cancels inverse pairs through nesting") {
  auto alpha = Alphabet::make({"x", "y"});
  // x y y^-1 x^-1 x y -> x y
  Word w = Word::reduce(alpha, WordMode::Free,
                        {{0, 1}, {1, 1}, {1, -1}, {0, -1}, {0, 1}, {1, 1}});
  CHECK(w.letters() == std::vector<Letter>{{0, 1}, {1, 1}});
  // x x^-1 -> identity
  CHECK(Word::reduce(alpha, WordMode::Free, {{0, 1}, {0, -1}}).is_identity());
  // x x does not cancel in free mode
  CHECK(Word::reduce(alpha, WordMode::Free, {{0, 1}, {0, 1}}).length() == 2);
}

TEST_CASE("involutory reduction cancels equal neighbours and drops signs") {
  auto alpha = Alphabet::make({"x", "y"});
  CHECK(Word::reduce(alpha, WordMode::Involutory, {{0, 1}, {0, 1}}).is_identity());
  CHECK(Word::reduce(alpha, WordMode::Involutory, {{0, 1}, {0, -1}}).is_identity());
  Word w = Word::reduce(alpha, WordMode::Involutory, {{0, -1}, {1, 1}, {1, 1}, {0, 1}});
  CHECK(w.is_identity());
  Word v = Word::reduce(alpha, WordMode::Involutory, {{0, -1}, {1, -1}});
  CHECK(v.letters() == std::vector<Letter>{{0, 1}, {1, 1}});
}

TEST_CASE("single-pass reduction matches the rescan oracle on random input") {
  std::mt19937 rng(20240817);
  auto alpha = Alphabet::make({"a", "b", "c"});
  for (WordMode mode : {WordMode::Free, WordMode::Involutory}) {
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<Letter> raw = random_letters(rng, 3, static_cast<std::size_t>(trial % 40));
      Word fast = Word::reduce(alpha, mode, raw);
      CHECK(fast.letters() == scan_until_stable(mode, raw));
    }
  }
}

TEST_CASE("reduce validates letters") {
  auto alpha = Alphabet::make({"x"});
  CHECK_THROWS_AS(Word::reduce(alpha, WordMode::Free, {{1, 1}}), AlphabetError);
  CHECK_THROWS_AS(Word::reduce(alpha, WordMode::Free, {{-1, 1}}), AlphabetError);
  CHECK_THROWS_AS(Word::reduce(alpha, WordMode::Free, {{0, 2}}), AlphabetError);
  CHECK_THROWS_AS(Word::reduce(alpha, WordMode::Free, {{0, 0}}), AlphabetError);
  CHECK_THROWS_AS(Word::reduce(nullptr, WordMode::Free, {}), AlphabetError);
}

TEST_CASE("inverse composes to the identity in both modes") {
  std::mt19937 rng(7);
  auto alpha = Alphabet::make({"a", "b", "c"});
  for (WordMode mode : {WordMode::Free, WordMode::Involutory}) {
    for (int trial = 0; trial < 100; ++trial) {
      Word w = Word::reduce(alpha, mode, random_letters(rng, 3, 25));
      CHECK((w * w.inverse()).is_identity());
      CHECK((w.inverse() * w).is_identity());
      CHECK(w.inverse().inverse() == w);
    }
  }
  // Involutory words are their own inverses read backwards with no sign flip.
  Word v = Word::reduce(alpha, WordMode::Involutory, {{0, 1}, {1, 1}});
  CHECK(v.inverse().letters() == std::vector<Letter>{{1, 1}, {0, 1}});
}

TEST_CASE("product is associative and respects identities") {
  std::mt19937 rng(11);
  auto alpha = Alphabet::make({"a", "b"});
  Word e = Word::identity(alpha, WordMode::Free);
  for (int trial = 0; trial < 100; ++trial) {
    Word x = Word::reduce(alpha, WordMode::Free, random_letters(rng, 2, 12));
    Word y = Word::reduce(alpha, WordMode::Free, random_letters(rng, 2, 12));
    Word z = Word::reduce(alpha, WordMode::Free, random_letters(rng, 2, 12));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * e == x);
    CHECK(e * x == x);
  }
}

TEST_CASE("products across modes or alphabets are rejected") {
  auto alpha = Alphabet::make({"a", "b"});
  auto other = Alphabet::make({"c", "d"});
  Word f = Word::generator(alpha, WordMode::Free, 0);
  Word i = Word::generator(alpha, WordMode::Involutory, 0);
  Word o = Word::generator(other, WordMode::Free, 0);
  CHECK_THROWS_AS(f * i, AlphabetError);
  CHECK_THROWS_AS(f * o, AlphabetError);
  // Equal-content alphabets from separate make() calls are compatible.
  auto clone = Alphabet::make({"a", "b"});
  CHECK(f * Word::generator(clone, WordMode::Free, 1) ==
        Word::reduce(alpha, WordMode::Free, {{0, 1}, {1, 1}}));
}

TEST_CASE("mode conversion quotients or lifts") {
  auto alpha = Alphabet::make({"a", "b"});
  // a b^-1 a -> involutory a b a
  Word f = Word::reduce(alpha, WordMode::Free, {{0, 1}, {1, -1}, {0, 1}});
  Word q = f.in_mode(WordMode::Involutory);
  CHECK(q.letters() == std::vector<Letter>{{0, 1}, {1, 1}, {0, 1}});
  // a a^-1 b b -> involutory identity
  CHECK(Word::reduce(alpha, WordMode::Free, {{0, 1}, {0, 1}, {1, 1}, {1, 1}})
            .in_mode(WordMode::Involutory)
            .is_identity());
  // Lifting keeps letters with positive signs.
  Word lifted = q.in_mode(WordMode::Free);
  CHECK(lifted.mode() == WordMode::Free);
  CHECK(lifted.letters() == std::vector<Letter>{{0, 1}, {1, 1}, {0, 1}});
  CHECK(q.in_mode(WordMode::Involutory) == q);
}

TEST_CASE("substitute is a homomorphism") {
  std::mt19937 rng(13);
  auto src = Alphabet::make({"a", "b"});
  auto dst = Alphabet::make({"x", "y", "z"});
  std::vector<Word> images{
      Word::reduce(dst, WordMode::Free, {{0, 1}, {1, -1}}),
      Word::reduce(dst, WordMode::Free, {{2, 1}, {2, 1}, {0, -1}}),
  };
  for (int trial = 0; trial < 100; ++trial) {
    Word w1 = Word::reduce(src, WordMode::Free, random_letters(rng, 2, 10));
    Word w2 = Word::reduce(src, WordMode::Free, random_letters(rng, 2, 10));
    CHECK(substitute(w1 * w2, images) == substitute(w1, images) * substitute(w2, images));
    CHECK(substitute(w1.inverse(), images) == substitute(w1, images).inverse());
  }
  CHECK(substitute(Word::identity(src, WordMode::Free), images).is_identity());
}

TEST_CASE("substitute validates the image family") {
  auto src = Alphabet::make({"a", "b"});
  auto dst = Alphabet::make({"x"});
  Word w = Word::generator(src, WordMode::Free, 0);
  CHECK_THROWS_AS(substitute(w, {Word::generator(dst, WordMode::Free, 0)}), AlphabetError);
  CHECK_THROWS_AS(substitute(w, {Word::generator(dst, WordMode::Free, 0),
                                 Word::generator(dst, WordMode::Involutory, 0)}),
                  AlphabetError);
}

TEST_CASE("exponent vector counts signed occurrences, free mode only") {
  auto alpha = Alphabet::make({"a", "b", "c"});
  Word w = Word::reduce(alpha, WordMode::Free, {{0, 1}, {1, -1}, {0, 1}, {2, -1}, {1, -1}});
  CHECK(exponent_vector(w) == std::vector<long long>{2, -2, -1});
  CHECK(exponent_vector(Word::identity(alpha, WordMode::Free)) ==
        std::vector<long long>{0, 0, 0});
  CHECK_THROWS_AS(exponent_vector(Word::generator(alpha, WordMode::Involutory, 0)), DomainError);
}

TEST_CASE("every constructed word is already reduced") {
  std::mt19937 rng(17);
  auto alpha = Alphabet::make({"a", "b"});
  for (WordMode mode : {WordMode::Free, WordMode::Involutory}) {
    for (int trial = 0; trial < 200; ++trial) {
      Word w = Word::reduce(alpha, mode, random_letters(rng, 2, 30));
      const auto& ls = w.letters();
      for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
        const bool cancels = ls[i].gen == ls[i + 1].gen &&
                             (mode == WordMode::Involutory || ls[i].sign == -ls[i + 1].sign);
        CHECK(!cancels);
      }
    }
  }
}
