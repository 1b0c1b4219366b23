#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpi {

// Root of every error the library raises. A "not a unit" answer is a value
// (std::optional), never an exception.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different coefficient rings and no canonical embedding exists.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// Caller violated a documented precondition (inadmissible LPI, repeated
// Vandermonde points, dimension mismatch, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive request would exceed the configured enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A negative exponent was evaluated at an element with no certified inverse.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

// A built-in verification step failed. Mathematically impossible; seeing
// one means the implementation is wrong.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lpi
