#pragma once

#include <stdexcept>
#include <string>

namespace orbitforge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (bad shape, non-nilpotent input, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The characteristic polynomial of some element does not split over the rationals.
class UnsupportedSpectrum : public Error {
 public:
  using Error::Error;
};

/// An internal invariant or a mathematical check failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Random sampling produced dominance-incomparable class labels.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

[[noreturn]] inline void fail_precondition(const std::string& what) {
  throw PreconditionError("precondition violated: " + what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail_precondition(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantViolation("invariant violated: " + what);
}

}  // namespace orbitforge
