#pragma once

#include <stdexcept>
#include <string>

namespace satake {

/// Raised when an input violates a precondition (bad root datum, non-dominant
/// coweight, non-reduced word, ...). The CLI maps it to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an enumeration would exceed its configured size budget.
/// The CLI maps it to exit code 2.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace satake
