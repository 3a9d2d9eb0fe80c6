#pragma once

#include <stdexcept>
#include <string>

namespace bellstir {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (bad parameter, wrong graph class).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An enumeration or materialization would exceed its configured size guard.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A constructive step could not be completed. The message carries the
// instance and the offending objects so the failure can be reproduced.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace bellstir
