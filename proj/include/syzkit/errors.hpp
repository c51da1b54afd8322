#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace syz {

/// Malformed textual input.  Line and column are 1-based; line 0 means the
/// input was a single expression with no line structure.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return "column " + std::to_string(column) + ": " + what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Operands live over different polynomial rings.
class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("operands belong to different rings") {}
};

/// A generator or matrix column is not homogeneous where a graded object is required.
class NotHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The unit ideal was supplied where a proper ideal is required.
class UnitIdeal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace syz
