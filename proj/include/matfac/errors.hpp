#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mfac {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands from different cyclotomic fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Operands from different polynomial rings, or factorizations over
// incompatible (ring, d, f) data.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// A construction was called on input violating its mathematical hypothesis.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Raised where a question is outside what the library decides (e.g.
// coprimality of non-monomials).
class Undecidable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mfac
