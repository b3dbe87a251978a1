#pragma once

#include <stdexcept>
#include <string>

namespace strathom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or ambient dimensions that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Malformed or schema-violating external input (files, CLI options).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace strathom
