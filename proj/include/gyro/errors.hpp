#pragma once

#include <stdexcept>
#include <string>

namespace gyro {

/// An argument violates a documented precondition of the operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request exceeds a documented size bound of an exhaustive algorithm.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A consequence of a proven theorem failed to hold at runtime; indicates a
/// defect in this library or a corrupted structure, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gyro
