#pragma once

#include <stdexcept>

namespace gravotto {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on plain argument values was violated.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A station lies on or beyond a horizon, or outside the static patch.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The station pair is ordered so the device cannot refrigerate.
class OrientationError : public Error {
 public:
  using Error::Error;
};

/// Horizon-relative anchoring requested for a metric without a horizon.
class NoHorizonError : public Error {
 public:
  using Error::Error;
};

}  // namespace gravotto
