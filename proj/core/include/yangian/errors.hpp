#pragma once

#include <stdexcept>
#include <string>

namespace yangian {

// Malformed or out-of-range user input (bad literal, unknown node, d = 0, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A monic polynomial whose roots are not affine in the parameter over Q.
class SymbolicRootsUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed (weight bookkeeping, extremal-vector
// crosschecks, slope checks). Indicates a bug or an unsupported input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace yangian
