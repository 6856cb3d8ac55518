#pragma once

#include <stdexcept>
#include <string>

namespace t2p {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- parsing / building ---
struct EmptyInputError : Error {
  using Error::Error;
};
struct MissingPlaceholderError : Error {
  using Error::Error;
};
struct InvalidGraphError : Error {
  using Error::Error;
};

// --- transcript store / client ---
struct FixtureMissError : Error {
  using Error::Error;
};
struct TimeoutError : Error {
  using Error::Error;
};
struct RateLimitedError : Error {
  using Error::Error;
};
struct AuthFailureError : Error {
  using Error::Error;
};
struct TransportError : Error {
  using Error::Error;
};

// --- evaluation ---
struct InconsistentAliasError : Error {
  using Error::Error;
};
struct SentenceIdMismatchError : Error {
  using Error::Error;
};
struct InsufficientRunsError : Error {
  using Error::Error;
};
struct SchemaViolationError : Error {
  using Error::Error;
};

}  // namespace t2p
