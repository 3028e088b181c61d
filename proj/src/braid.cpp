#include "braidcert/braid.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "braidcert/word_io.hpp"

namespace braidcert {

namespace {

constexpr long kMaxBraidExponent = 100000;

void require_index(int strands, int index, int line, int col) {
  if (index < 1 || index >= strands)
    throw ParseError("braid generator index out of range (1.." + std::to_string(strands - 1) + ")",
                     line, col);
}

// Letter images of one Artin generator on the loop alphabet, as free words.
std::vector<Word> artin_images(const AlphabetPtr& alpha, const BraidLetter& l) {
  const int n = static_cast<int>(alpha->size());
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n));
  const int i = l.index - 1;  // 0-based id of g_i
  for (int g = 0; g < n; ++g) {
    std::vector<Letter> letters;
    if (l.sign > 0) {
      if (g == i)
        letters = {{i, 1}, {i + 1, 1}, {i, -1}};
      else if (g == i + 1)
        letters = {{i, 1}};
      else
        letters = {{g, 1}};
    } else {
      if (g == i)
        letters = {{i + 1, 1}};
      else if (g == i + 1)
        letters = {{i + 1, -1}, {i, 1}, {i + 1, 1}};
      else
        letters = {{g, 1}};
    }
    images.push_back(Word::reduce(alpha, WordMode::Free, std::move(letters)));
  }
  return images;
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw DomainError("a braid group needs at least 2 strands");
  for (const BraidLetter& l : letters_) {
    if (l.index < 1 || l.index >= strands_) throw DomainError("braid generator index out of range");
    if (l.sign != 1 && l.sign != -1) throw DomainError("braid letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out(letters_.rbegin(), letters_.rend());
  for (BraidLetter& l : out) l.sign = -l.sign;
  return BraidWord(strands_, std::move(out));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands_ != b.strands_) throw DomainError("strand count mismatch");
  std::vector<BraidLetter> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.strands_, std::move(letters));
}

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 2) throw DomainError("a braid group needs at least 2 strands");
  std::vector<BraidLetter> letters;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    int at = static_cast<int>(i) + 1;
    if (text[i] != 's') throw ParseError("expected braid generator 's<i>'", 1, at);
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected strand index after 's'", 1, static_cast<int>(i) + 1);
    long index = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      index = index * 10 + (text[i] - '0');
      if (index > strands) break;
      ++i;
    }
    require_index(strands, static_cast<int>(index), 1, at);
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      int exp_at = static_cast<int>(i) + 1;
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected integer exponent", 1, exp_at);
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > kMaxBraidExponent) throw ParseError("exponent too large", 1, exp_at);
        ++i;
      }
      exp = neg ? -value : value;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("expected whitespace between braid letters", 1, static_cast<int>(i) + 1);
    const int sign = exp < 0 ? -1 : 1;
    for (long k = 0; k < std::labs(exp); ++k)
      letters.push_back(BraidLetter{static_cast<int>(index), sign});
    skip_ws();
  }
  // Empty (or whitespace-only) input denotes the identity braid.
  return BraidWord(strands, std::move(letters));
}

std::string print_braid(const BraidWord& b) {
  const auto& letters = b.letters();
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long run = static_cast<long>(j - i);
    const long exp = letters[i].sign * run;
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(letters[i].index);
    if (exp != 1) out += '^' + std::to_string(exp);
    i = j;
  }
  return out;
}

AlphabetPtr loop_alphabet(int n) {
  static std::mutex mu;
  static std::map<int, AlphabetPtr> cache;
  if (n < 1) throw DomainError("loop alphabet needs at least one generator");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back("g" + std::to_string(i));
  return cache.emplace(n, Alphabet::make(std::move(names))).first->second;
}

BasedPath base_path(int strands, int terminal, WordMode mode) {
  if (terminal < 1 || terminal > strands) throw DomainError("path terminal out of range");
  return BasedPath{Word::identity(loop_alphabet(strands), mode), terminal};
}

std::string print_path(const BasedPath& p) {
  std::string rho = "rho" + std::to_string(p.terminal);
  if (p.prefix.is_identity()) return rho;
  return print_word(p.prefix) + " " + rho;
}

Word act_on_loop(const BraidWord& b, const Word& w, WordMode out_mode) {
  const auto alpha = w.alphabet();
  if (alpha->size() != static_cast<std::size_t>(b.strands()))
    throw AlphabetError("loop word alphabet does not match the strand count");
  Word cur = w.in_mode(WordMode::Free);
  const auto& letters = b.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    cur = substitute(cur, artin_images(alpha, *it));
  return cur.in_mode(out_mode);
}

Word reflect_loop(const Word& w) {
  if (w.mode() != WordMode::Involutory)
    throw DomainError("reflection is only supported for involutory words");
  const int n = static_cast<int>(w.alphabet()->size());
  std::vector<Letter> out = w.letters();
  for (Letter& l : out) l.gen = n - 1 - l.gen;
  return Word::reduce(w.alphabet(), WordMode::Involutory, std::move(out));
}

BasedPath act_on_path(const BraidWord& b, const BasedPath& p, WordMode out_mode) {
  const auto alpha = p.prefix.alphabet();
  if (alpha->size() != static_cast<std::size_t>(b.strands()))
    throw AlphabetError("path prefix alphabet does not match the strand count");
  if (p.terminal < 1 || p.terminal > b.strands()) throw DomainError("path terminal out of range");
  Word prefix = p.prefix.in_mode(WordMode::Free);
  int terminal = p.terminal;
  const auto& letters = b.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const BraidLetter& l = *it;
    prefix = substitute(prefix, artin_images(alpha, l));
    const int i = l.index;
    if (l.sign > 0) {
      if (terminal == i) {
        prefix = prefix * Word::generator(alpha, WordMode::Free, i - 1);
        terminal = i + 1;
      } else if (terminal == i + 1) {
        terminal = i;
      }
    } else {
      if (terminal == i) {
        terminal = i + 1;
      } else if (terminal == i + 1) {
        prefix = prefix * Word::generator(alpha, WordMode::Free, i, -1);
        terminal = i;
      }
    }
  }
  return BasedPath{prefix.in_mode(out_mode), terminal};
}

BasedPath reflect_path(const BasedPath& p) {
  const int n = static_cast<int>(p.prefix.alphabet()->size());
  return BasedPath{reflect_loop(p.prefix), n + 1 - p.terminal};
}

Word reflected_loop_action(const BraidWord& b, int gamma_index) {
  if (gamma_index < 1 || gamma_index > b.strands())
    throw DomainError("loop generator index out of range");
  const auto alpha = loop_alphabet(b.strands());
  Word gamma = Word::generator(alpha, WordMode::Free, gamma_index - 1);
  return reflect_loop(act_on_loop(b, gamma, WordMode::Involutory));
}

Perm induced_permutation(const BraidWord& b, bool with_reflection) {
  const int n = b.strands();
  Perm acc = Perm::identity(n);
  const auto& letters = b.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    acc = acc * Perm::transposition(n, it->index, it->index + 1);
  if (with_reflection) {
    std::vector<int> refl(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) refl[static_cast<std::size_t>(i - 1)] = n + 1 - i;
    acc = acc * Perm::from_images(std::move(refl));
  }
  return acc;
}

}  // namespace braidcert
