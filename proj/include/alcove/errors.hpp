#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

/// Input violates an operation's precondition (bad coweight, malformed module, ...).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured size cap.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A computation method cannot be applied to the given input
/// (e.g. coordinate enumeration on a non-combinatorial module).
class MethodPrecondition : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace alcove
