#pragma once

#include <stdexcept>
#include <string>

namespace lieforge {

// Base for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition (bad ring, wrong shapes, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An invariant that the library itself guarantees failed. Seeing one of these
// means a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lieforge
