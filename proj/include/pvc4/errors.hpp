#pragma once

#include <stdexcept>
#include <string>

namespace pvc4 {

// Raised when a structural guarantee of the rule system does not hold. Seeing
// one means a bug in rule ordering or matching, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

class NodeBudgetExceeded : public std::runtime_error {
 public:
  explicit NodeBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pvc4
