#pragma once

#include <stdexcept>
#include <string>

namespace eggdrop {

// Raised when an internal invariant of the solver or policy is broken, e.g. a
// division that must be exact leaves a remainder. Never a user input error;
// those are reported as std::invalid_argument.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace eggdrop
