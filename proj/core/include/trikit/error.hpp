#pragma once

#include <stdexcept>
#include <string>

namespace trikit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (JSON, integer lists, file contents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A domain invariant or precondition does not hold for the given input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not. Indicates a bug, not bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace trikit
