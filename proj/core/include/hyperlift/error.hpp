#pragma once

#include <stdexcept>
#include <string>

namespace hyperlift {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller (bad prime, degree,
// non-squarefree input, unsupported characteristic, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A search bound (extension degree, group order, coset count) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// An invariant that the library itself should guarantee failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperlift
