#pragma once

#include <stdexcept>
#include <string>

namespace sgcount {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A level or size lies outside what a growth table or bound supports.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The requested method or format does not exist for this input.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// The request would exceed a memory or size guard.
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

/// A self-consistency check inside the library failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sgcount
