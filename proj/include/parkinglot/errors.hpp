#pragma once

#include <stdexcept>
#include <string>

namespace parkinglot {

// Iterative routine failed to reach its tolerance (bracketing, ternary
// search, angle limit, rejection sampling).
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the inputs.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace parkinglot
