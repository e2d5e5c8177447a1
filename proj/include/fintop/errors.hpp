#pragma once

#include <stdexcept>
#include <string>

namespace fintop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural invariant (not a partial order, not a group...).
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search guard was hit. Results are never truncated silently.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fintop
