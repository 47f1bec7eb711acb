#pragma once

#include <stdexcept>
#include <string>

namespace cstar {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IncompatibleField : public Error {
 public:
  using Error::Error;
};

/// Operands live in rings with different variables, weights or orders.
class IncompatibleRing : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A mathematical hypothesis of an operation does not hold for its input.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (polynomial syntax, JSON structure).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that describes an inconsistent object.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A lift that the theory guarantees could not be found.
class LiftFailed : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug or a violated hypothesis.
class InternalError : public Error {
 public:
  using Error::Error;
};

class IterationLimit : public Error {
 public:
  using Error::Error;
};

/// The proposed parameters do not cut the ring down to finite length.
class NotASop : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

/// A vector that had to lie in a submodule does not.
class NotInModule : public Error {
 public:
  using Error::Error;
};

/// The top map of the transform disagrees with its closed-form expression.
class ClosedFormMismatch : public InternalError {
 public:
  using InternalError::InternalError;
};

/// A difference of Hilbert series that had to be a polynomial is not.
class NonPolynomialDifference : public Error {
 public:
  using Error::Error;
};

}  // namespace cstar
