#pragma once

#include <stdexcept>
#include <string>

namespace ordvec {

/// Malformed input: bad rational text, division by zero, invalid instance data.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A documented precondition of an operation does not hold for its arguments.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " +
                            std::to_string(want) + ", got " +
                            std::to_string(got));
  }
}

}  // namespace ordvec
