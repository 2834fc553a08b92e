#pragma once

#include <stdexcept>
#include <string>

namespace coxkit {

// Base of every exception thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated a precondition (mismatched conductors, bad indices, ...).
struct UsageError : Error {
  using Error::Error;
};

// Malformed textual or file input.
struct ParseError : UsageError {
  using UsageError::UsageError;
};

// A computed object failed a structural identity that must hold
// (non-factoring fixed-space polynomial, broken class partition, ...).
struct IntegrityError : Error {
  using Error::Error;
};

// A size cap or search budget was exceeded.
struct ResourceError : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// galois_apply called with k not coprime to the conductor.
struct InvalidAutomorphism : UsageError {
  using UsageError::UsageError;
};

// regular_classes called for an order d that is not a regular number.
struct NoRegularElement : Error {
  using Error::Error;
};

// Two generators with no alternating braid-like relation.
struct NotCoxeterLike : Error {
  using Error::Error;
};

}  // namespace coxkit
