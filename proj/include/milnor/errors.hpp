#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace milnor {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or arrangement text. `position` is a 0-based offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic impossibility, e.g. inverting zero or a denominator divisible by p.
class DomainError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The input exceeds desk scale (pair queue bound, exponent overflow, ...).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Randomized steps disagreed or kept hitting a degenerate draw.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

/// A target point the triangular preimage solver cannot normalize.
class DegenerateTarget : public GenericityFailure {
 public:
  using GenericityFailure::GenericityFailure;
};

/// The Milnor algebra has a Hilbert polynomial of positive degree.
class NonIsolatedSingularities : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A Hilbert polynomial that cannot come from a free divisor of the given degree.
class NotFreeCompatible : public Error {
 public:
  using Error::Error;
};

/// An arrangement claimed to be generic has four planes through a point.
class NotGeneric : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace milnor
