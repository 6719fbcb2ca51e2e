#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hhcalc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public FieldError {
 public:
  DivisionByZero() : FieldError("division by zero") {}
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NonConfluentError : public Error {
 public:
  using Error::Error;
};

class InfiniteDimensionalError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed, or an algebraic identity failed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the supported domain (zero q, characteristic 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace hhcalc
