#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cofinite {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An encoding does not describe an injective map.
struct InjectivityViolation : Error {
  using Error::Error;
};

// A value left the positive integers.
struct NonPositiveValue : Error {
  using Error::Error;
};

struct NotIdempotent : Error {
  using Error::Error;
};

struct NotAUnit : Error {
  using Error::Error;
};

struct NotInHClass : Error {
  using Error::Error;
};

struct KindMismatch : Error {
  using Error::Error;
};

struct EqualElements : Error {
  using Error::Error;
};

struct FixedSetOutsideDomain : Error {
  using Error::Error;
};

// Parse failure carrying the byte offset of the offending character.
struct ParseError : Error {
  ParseError(std::size_t at, const std::string& message)
      : Error(message + " (byte " + std::to_string(at) + ")"), position(at) {}

  std::size_t position;
};

}  // namespace cofinite
