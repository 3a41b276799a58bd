#pragma once

#include <stdexcept>
#include <string>

namespace permstat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input rejected while reading a permutation word.
struct ParseError : Error {
  using Error::Error;
};

// Precondition violation on an otherwise well-formed call.
struct DomainError : Error {
  using Error::Error;
};

struct NotDivisibleError : Error {
  using Error::Error;
};

struct NotSymmetricError : Error {
  using Error::Error;
};

struct EmbracingOutOfRangeError : Error {
  using Error::Error;
};

struct CacheBoundExceededError : Error {
  using Error::Error;
};

struct FlavorMismatchError : Error {
  using Error::Error;
};

struct UnknownCheckIdError : Error {
  using Error::Error;
};

struct BoundExceededError : Error {
  using Error::Error;
};

// A structural fact the algorithms rely on failed to hold at runtime.
struct InternalAssertionError : Error {
  using Error::Error;
};

struct MissingStatError : Error {
  using Error::Error;
};

}  // namespace permstat
