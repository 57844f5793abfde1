#pragma once

#include <stdexcept>
#include <string>

namespace twocs {

// Input violates a file schema or a structural precondition (CLI exit 2).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration would exceed the configured budget (CLI exit 3).
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation called outside its domain (non-composable pair, bad split point, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace twocs
