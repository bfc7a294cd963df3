#pragma once

#include <stdexcept>
#include <string>

namespace ualab {

/// Input value outside the declared domain (bad element, bad arity, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed .alg / term / map input. `line` is 1-based, 0 when unknown.
struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_ = 0)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
        line(line_) {}
};

/// An enumeration or closure would exceed the configured budget.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ualab
