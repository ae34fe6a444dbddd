#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace socle {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings with different numbers of variables.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("variable count mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

/// A precondition on an argument value was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the range of the exponent type.
class ExponentOverflow : public Error {
 public:
  ExponentOverflow() : Error("exponent overflow") {}
};

/// An enumeration would exceed the configured candidate budget. Never
/// accompanied by a partial answer.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(unsigned long long required, unsigned long long budget)
      : Error("enumeration budget exceeded: need " + std::to_string(required) +
              " candidates, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  unsigned long long required() const noexcept { return required_; }
  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long required_;
  unsigned long long budget_;
};

/// Malformed input document. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace socle
