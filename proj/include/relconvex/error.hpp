#pragma once

#include <stdexcept>
#include <string>

namespace relconvex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: shape mismatch, invalid weights, unparsable text.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A point was handed to a function outside the function's domain.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// A stated hypothesis of an inequality or relation does not hold.
class HypothesisError : public InputError {
 public:
  using InputError::InputError;
};

/// An iterative method failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace relconvex
