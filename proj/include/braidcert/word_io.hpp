#pragma once

#include <string>
#include <string_view>

#include "braidcert/word.hpp"

namespace braidcert {

// Word grammar (tokens may be separated by whitespace):
//   word := term {term} | "e"
//   term := atom ["^" int]
//   atom := gen | "(" word ")"
//   gen  := letter {letter|digit}
//   int  := ["-"] digit {digit}
// "e" denotes the empty word and is only valid standing alone (possibly inside
// parentheses). Exponents expand; the result is reduced in the given mode.
Word parse_word(std::string_view text, const AlphabetPtr& alphabet, WordMode mode);

// Same parser with an explicit error position base: errors are reported at
// `line`, with columns offset so that text[0] is column `col_base`.
Word parse_word_at(std::string_view text, const AlphabetPtr& alphabet, WordMode mode, int line,
                   int col_base);

// Letterwise printing: free mode uses explicit "^-1" on inverse letters,
// involutory mode prints bare letters. The empty word prints as "e".
// parse_word(print_word(w)) == w.
std::string print_word(const Word& w);

}  // namespace braidcert
