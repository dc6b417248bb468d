#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prsequiv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Violated input requirement (wrong process class, unknown constant, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An operation needed the outgoing transitions of a state that exploration cut off.
class IncompleteLtsError : public Error {
 public:
  using Error::Error;
};

// A configured ceiling (candidate count, subset count, norm value) was hit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace prsequiv
