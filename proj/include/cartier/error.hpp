#pragma once

#include <stdexcept>
#include <string>

namespace cartier {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Division by zero, inverting a singular matrix.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Operands built over different fields.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// Incompatible matrix shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but mathematically unacceptable (even p, reducible
// modulus, non-squarefree f, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed text (element grammar, spec files, reports).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A configurable resource guard was hit.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// A runtime self-check failed. Never expected; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cartier
