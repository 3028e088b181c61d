#include "braidcert/word_io.hpp"

#include <cctype>
#include <cstdlib>

namespace braidcert {

namespace {

constexpr long kMaxExponent = 1000000;
constexpr std::size_t kMaxLetters = std::size_t(1) << 22;

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  int line;
  int col_base;  // 1-based column of s[0] in the source line

  int col() const { return col_base + static_cast<int>(i); }
  bool eof() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  [[noreturn]] void fail(const std::string& msg, int at_col) const {
    throw ParseError(msg, line, at_col);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, col()); }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++i;
  }
};

bool at_body_end(Cursor& c) {
  c.skip_ws();
  return c.eof() || c.peek() == ')';
}

std::string_view take_identifier(Cursor& c) {
  std::size_t start = c.i;
  while (!c.eof() && std::isalnum(static_cast<unsigned char>(c.peek()))) ++c.i;
  return c.s.substr(start, c.i - start);
}

long take_int(Cursor& c) {
  int at = c.col();
  bool neg = false;
  if (!c.eof() && c.peek() == '-') {
    neg = true;
    ++c.i;
  }
  if (c.eof() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    c.fail("expected integer exponent", at);
  long value = 0;
  while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    value = value * 10 + (c.peek() - '0');
    if (value > kMaxExponent) c.fail("exponent too large", at);
    ++c.i;
  }
  return neg ? -value : value;
}

std::vector<Letter> invert_letters(const std::vector<Letter>& letters) {
  std::vector<Letter> out(letters.rbegin(), letters.rend());
  for (Letter& l : out) l.sign = -l.sign;
  return out;
}

void append_capped(std::vector<Letter>& out, const std::vector<Letter>& piece, Cursor& c, int at) {
  if (out.size() + piece.size() > kMaxLetters) c.fail("word too long", at);
  out.insert(out.end(), piece.begin(), piece.end());
}

std::vector<Letter> parse_body(Cursor& c, const Alphabet& alphabet, bool inside_paren);

std::vector<Letter> parse_atom(Cursor& c, const Alphabet& alphabet) {
  c.skip_ws();
  if (c.eof()) c.fail("expected generator or '('");
  if (c.peek() == '(') {
    ++c.i;
    std::vector<Letter> body = parse_body(c, alphabet, true);
    c.skip_ws();
    if (c.eof() || c.peek() != ')') c.fail("expected ')'");
    ++c.i;
    return body;
  }
  if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
    int at = c.col();
    std::string_view name = take_identifier(c);
    auto id = alphabet.find(name);
    if (!id) c.fail("unknown generator '" + std::string(name) + "'", at);
    return {Letter{*id, 1}};
  }
  c.fail(std::string("unexpected character '") + c.peek() + "'");
}

std::vector<Letter> parse_term(Cursor& c, const Alphabet& alphabet) {
  int at = c.col();
  std::vector<Letter> atom = parse_atom(c, alphabet);
  c.skip_ws();
  if (c.eof() || c.peek() != '^') return atom;
  ++c.i;
  c.skip_ws();
  long exp = take_int(c);
  std::vector<Letter> out;
  const std::vector<Letter> piece = exp < 0 ? invert_letters(atom) : atom;
  for (long k = 0; k < std::labs(exp); ++k) append_capped(out, piece, c, at);
  return out;
}

std::vector<Letter> parse_body(Cursor& c, const Alphabet& alphabet, bool inside_paren) {
  c.skip_ws();
  int body_start = c.col();
  // A lone "e" is the empty word.
  if (!c.eof() && c.peek() == 'e') {
    Cursor save = c;
    std::string_view ident = take_identifier(c);
    if (ident == "e") {
      if (!at_body_end(c)) c.fail("'e' must stand alone", body_start);
      return {};
    }
    c = save;
  }
  std::vector<Letter> out;
  bool any = false;
  while (!at_body_end(c)) {
    int at = c.col();
    append_capped(out, parse_term(c, alphabet), c, at);
    any = true;
  }
  if (!any) c.fail("empty word (use 'e' for the identity)", body_start);
  (void)inside_paren;
  return out;
}

}  // namespace

Word parse_word_at(std::string_view text, const AlphabetPtr& alphabet, WordMode mode, int line,
                   int col_base) {
  if (!alphabet) throw AlphabetError("null alphabet");
  Cursor c{text, 0, line, col_base};
  std::vector<Letter> letters = parse_body(c, *alphabet, false);
  c.skip_ws();
  if (!c.eof()) c.fail(c.peek() == ')' ? "unexpected ')'" : "trailing input after word");
  return Word::reduce(alphabet, mode, std::move(letters));
}

Word parse_word(std::string_view text, const AlphabetPtr& alphabet, WordMode mode) {
  return parse_word_at(text, alphabet, mode, 1, 1);
}

std::string print_word(const Word& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += w.alphabet()->name(l.gen);
    if (w.mode() == WordMode::Free && l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace braidcert
