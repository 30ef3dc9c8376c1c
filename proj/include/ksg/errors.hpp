#pragma once

#include <stdexcept>
#include <string>

namespace ksg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct RadicalMismatch : Error {
  explicit RadicalMismatch(long lhs, long rhs)
      : Error("mismatched radicals: sqrt(" + std::to_string(lhs) + ") vs sqrt(" +
              std::to_string(rhs) + ")") {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

// Input-file syntax or semantic problem, with 1-based position.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error("line " + std::to_string(line_) + ", col " + std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

// A configurable work limit was hit before a verdict was reached.
struct GuardExceeded : Error {
  using Error::Error;
};

}  // namespace ksg
