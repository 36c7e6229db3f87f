#pragma once

#include <stdexcept>
#include <string>

namespace treehop {

/// Base class for all engine errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's contract (bad argument or forbidden state).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An id did not resolve to a stored object.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Stored state is internally inconsistent (corrupt tree, path or index).
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// A remote backend stayed unreachable or kept failing after retries.
class TransportError : public Error {
 public:
  using Error::Error;
};

/// A model produced unusable output (empty, whitespace-only, over-length).
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// A file, record or protocol message could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration value or unknown configuration key.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace treehop
