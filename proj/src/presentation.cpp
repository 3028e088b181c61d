#include "braidcert/presentation.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "braidcert/word_io.hpp"

namespace braidcert {

namespace {

// Strips a trailing "#..." comment and surrounding whitespace; returns the
// 1-based column where the remaining content starts.
std::pair<std::string, int> strip_line(const std::string& raw) {
  std::string line = raw;
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  std::size_t begin = 0;
  while (begin < line.size() && std::isspace(static_cast<unsigned char>(line[begin]))) ++begin;
  std::size_t end = line.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
  return {line.substr(begin, end - begin), static_cast<int>(begin) + 1};
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  AlphabetPtr alphabet;
  std::vector<Word> relators;
  while (std::getline(in, raw)) {
    ++lineno;
    auto [line, col] = strip_line(raw);
    if (line.empty()) continue;
    if (!alphabet) {
      if (line.rfind("gens:", 0) != 0)
        throw ParseError("expected 'gens: <name> ...' as the first entry", lineno, col);
      std::istringstream fields(line.substr(5));
      std::vector<std::string> names;
      std::string name;
      while (fields >> name) names.push_back(name);
      if (names.empty()) throw ParseError("no generators listed", lineno, col);
      try {
        alphabet = Alphabet::make(std::move(names));
      } catch (const AlphabetError& e) {
        throw ParseError(e.what(), lineno, col);
      }
      continue;
    }
    if (line.rfind("rel:", 0) != 0)
      throw ParseError("expected 'rel: <word>'", lineno, col);
    const std::string body = line.substr(4);
    // Column of the word within the original line: content start + "rel:".
    relators.push_back(
        parse_word_at(body, alphabet, WordMode::Free, lineno, col + 4));
  }
  if (!alphabet) throw ParseError("empty presentation (missing 'gens:' line)", lineno + 1, 1);
  return Presentation{alphabet, std::move(relators)};
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open presentation file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

Presentation quotient(const Presentation& p, const std::vector<Word>& extra) {
  Presentation out = p;
  for (const Word& w : extra) {
    if (w.mode() != WordMode::Free) throw AlphabetError("relators must be free-mode words");
    if (!(w.alphabet() == p.alphabet || *w.alphabet() == *p.alphabet))
      throw AlphabetError("relator alphabet mismatch");
    out.relators.push_back(w);
  }
  return out;
}

TorusKnotGroup torus_knot_group(int p, int q) {
  if (p < 2 || q < 2) throw DomainError("torus knot parameters must be >= 2");
  if (std::gcd(p, q) != 1) throw DomainError("torus knot parameters must be coprime");
  auto alpha = Alphabet::make({"a1", "a2"});
  auto gen = [&](int id, int sign) { return Word::generator(alpha, WordMode::Free, id, sign); };
  Word a1 = gen(0, 1), a2 = gen(1, 1);

  std::vector<Letter> relator;
  for (int k = 0; k < p; ++k) relator.push_back({0, 1});
  for (int k = 0; k < q; ++k) relator.push_back({1, 1});

  Word meridian = gen(0, -1) * gen(1, -1);
  Word longitude = Word::identity(alpha, WordMode::Free);
  for (int k = 0; k < p * q; ++k) longitude = longitude * a2 * a1;
  for (int k = 0; k < p; ++k) longitude = longitude * gen(0, -1);

  Presentation group{alpha, {Word::reduce(alpha, WordMode::Free, std::move(relator))}};
  return TorusKnotGroup{std::move(group), std::move(meridian), std::move(longitude)};
}

Perm word_image(const Word& w, const std::vector<Perm>& images) {
  if (images.size() != w.alphabet()->size())
    throw AlphabetError("need one permutation image per generator");
  const int degree = images.empty() ? 0 : images.front().degree();
  for (const Perm& p : images)
    if (p.degree() != degree) throw DomainError("permutation degree mismatch");
  Perm acc = Perm::identity(degree);
  for (const Letter& l : w.letters()) {
    const Perm& g = images[static_cast<std::size_t>(l.gen)];
    acc = acc * (l.sign > 0 ? g : g.inverse());
  }
  return acc;
}

HomVerification verify_hom(const Presentation& p, const std::vector<Perm>& images) {
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    if (!word_image(p.relators[r], images).is_identity())
      return {false, static_cast<int>(r)};
  return {true, -1};
}

HomVerification verify_hom(const Presentation& p, const std::vector<Word>& images) {
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    if (!substitute(p.relators[r], images).is_identity())
      return {false, static_cast<int>(r)};
  return {true, -1};
}

}  // namespace braidcert
