#pragma once

#include <stdexcept>
#include <string>

namespace lorhol {

/// Operands built over Witt frames of different screen dimension.
class FrameMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that fails X^T I + I X = 0.
class NotInAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition of a structural check does not hold (wrong type, n too small, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lorhol
