#include "braidcert/word.hpp"

#include <cctype>
#include <utility>

namespace braidcert {

namespace {

bool valid_generator_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

void require_compatible(const Word& a, const Word& b) {
  if (a.mode() != b.mode()) throw AlphabetError("word mode mismatch");
  if (a.alphabet() != b.alphabet() && !(*a.alphabet() == *b.alphabet()))
    throw AlphabetError("alphabet mismatch");
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (!valid_generator_name(n))
      throw AlphabetError("invalid generator name '" + n + "'");
    if (n == "e") throw AlphabetError("'e' is reserved for the empty word");
    if (!ids_.emplace(n, static_cast<int>(i)).second)
      throw AlphabetError("duplicate generator name '" + n + "'");
  }
}

AlphabetPtr Alphabet::make(std::vector<std::string> names) {
  return AlphabetPtr(new Alphabet(std::move(names)));
}

std::optional<int> Alphabet::find(std::string_view name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

int Alphabet::id_of(std::string_view name) const {
  auto id = find(name);
  if (!id) throw AlphabetError("unknown generator '" + std::string(name) + "'");
  return *id;
}

Word::Word(AlphabetPtr alphabet, WordMode mode, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), mode_(mode), letters_(std::move(letters)) {}

Word Word::identity(AlphabetPtr alphabet, WordMode mode) {
  return Word(std::move(alphabet), mode, {});
}

Word Word::generator(AlphabetPtr alphabet, WordMode mode, int id, int sign) {
  return reduce(std::move(alphabet), mode, {Letter{id, sign}});
}

Word Word::reduce(AlphabetPtr alphabet, WordMode mode, std::vector<Letter> letters) {
  if (!alphabet) throw AlphabetError("null alphabet");
  const int ngens = static_cast<int>(alphabet->size());
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (Letter l : letters) {
    if (l.gen < 0 || l.gen >= ngens) throw AlphabetError("generator id out of range");
    if (l.sign != 1 && l.sign != -1) throw AlphabetError("letter sign must be +1 or -1");
    if (mode == WordMode::Involutory) l.sign = 1;
    const bool cancels =
        !stack.empty() && stack.back().gen == l.gen &&
        (mode == WordMode::Involutory || stack.back().sign == -l.sign);
    if (cancels)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(alphabet), mode, std::move(stack));
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  if (mode_ == WordMode::Free)
    for (Letter& l : out) l.sign = -l.sign;
  // A reduced word's reversal is reduced, but go through the factory anyway.
  return reduce(alphabet_, mode_, std::move(out));
}

Word Word::in_mode(WordMode target) const {
  if (target == mode_) return *this;
  return reduce(alphabet_, target, letters_);
}

Word operator*(const Word& a, const Word& b) {
  require_compatible(a, b);
  std::vector<Letter> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Word::reduce(a.alphabet_, a.mode_, std::move(letters));
}

bool operator==(const Word& a, const Word& b) {
  return a.mode_ == b.mode_ && a.letters_ == b.letters_ &&
         (a.alphabet_ == b.alphabet_ || *a.alphabet_ == *b.alphabet_);
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  if (images.size() != w.alphabet()->size())
    throw AlphabetError("substitution needs one image per generator");
  for (const Word& im : images) {
    if (im.mode() != images.front().mode() ||
        !(im.alphabet() == images.front().alphabet() || *im.alphabet() == *images.front().alphabet()))
      throw AlphabetError("substitution images must share alphabet and mode");
  }
  if (images.empty()) throw AlphabetError("substitution into an empty alphabet");
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const Word& im = l.sign > 0 ? images[static_cast<std::size_t>(l.gen)]
                                : images[static_cast<std::size_t>(l.gen)].inverse();
    out.insert(out.end(), im.letters().begin(), im.letters().end());
  }
  return Word::reduce(images.front().alphabet(), images.front().mode(), std::move(out));
}

std::vector<long long> exponent_vector(const Word& w) {
  if (w.mode() != WordMode::Free)
    throw DomainError("exponent sums are only defined for free-mode words");
  std::vector<long long> out(w.alphabet()->size(), 0);
  for (const Letter& l : w.letters()) out[static_cast<std::size_t>(l.gen)] += l.sign;
  return out;
}

}  // namespace braidcert
