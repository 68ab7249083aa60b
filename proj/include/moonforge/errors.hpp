#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "moonforge/core.hpp"

namespace moonforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed rational text or JSON payload.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A value violates a precondition at an API boundary (negative score,
// broken tournament invariant, size mismatch, cap exceeded, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(Witness witness);
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

class BlowupTooLargeError : public Error {
 public:
  BlowupTooLargeError(BigInt vertices, std::size_t cap);
  const BigInt& vertices() const { return vertices_; }
  std::size_t cap() const { return cap_; }

 private:
  BigInt vertices_;
  std::size_t cap_;
};

// A postcondition that the mathematics guarantees did not hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace moonforge
