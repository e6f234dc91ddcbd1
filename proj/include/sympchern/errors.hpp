#pragma once

#include <stdexcept>
#include <string>

namespace sympchern {

/// Base class for all library errors. Input-level problems derive from
/// InputError; anything else reaching the user is an internal bug.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : Error {
  using Error::Error;
};

struct ParseError : InputError {
  using InputError::InputError;
};

struct InvalidSpec : InputError {
  using InputError::InputError;
};

struct ZeroPolynomial : InputError {
  using InputError::InputError;
};

struct ZeroDenominator : InputError {
  using InputError::InputError;
};

struct DimensionTooSmall : InputError {
  using InputError::InputError;
};

struct DimensionTooLarge : InputError {
  using InputError::InputError;
};

struct WrongDegree : InputError {
  using InputError::InputError;
};

struct NonRealForm : InputError {
  using InputError::InputError;
};

struct WrongType : InputError {
  using InputError::InputError;
};

struct MismatchedModelSpace : InputError {
  using InputError::InputError;
};

struct NonPositiveVolume : InputError {
  using InputError::InputError;
};

struct DomainViolation : InputError {
  using InputError::InputError;
};

/// Violation of an invariant the library itself guarantees (e.g. a nonzero
/// residual in an identity that must hold). Maps to exit code 2 in the CLI.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace sympchern
