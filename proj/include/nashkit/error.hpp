#pragma once

#include <stdexcept>
#include <string>

namespace nashkit {

/// Malformed or inconsistent user input (documents, indices, flags).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical identity the library relies on did not hold.
/// Seeing one of these means a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nashkit
