#pragma once

#include <stdexcept>
#include <string>

namespace braidcert {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown generator, or alphabet/mode mismatch between operands.
struct AlphabetError : Error {
  using Error::Error;
};

// An operation precondition was violated (mode, range, resource guard).
struct DomainError : Error {
  using Error::Error;
};

// Syntax error in one of the text formats. Positions are 1-based.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error("line " + std::to_string(line_) + ", col " + std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

// A coset enumeration hit its coset limit where a closed table was required.
struct LimitError : Error {
  using Error::Error;
};

}  // namespace braidcert
