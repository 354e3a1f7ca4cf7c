#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace actmap {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed files, out-of-range coordinates, invalid
/// parameter combinations. Maps to CLI exit code 1.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Structured parse failure with 1-based line/column position.
class ParseError : public InvalidInputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InvalidInputError(what + " (line " + std::to_string(line) +
                          ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A planning target whose activity value is zero: either the layer count
/// was too small or the target is unreachable. Maps to CLI exit code 2.
class UncoveredTargetError : public Error {
 public:
  using Error::Error;
};

}  // namespace actmap
