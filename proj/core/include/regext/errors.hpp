#pragma once

#include <stdexcept>
#include <string>

namespace regext {

/// A configured size, dimension or orbit budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An internal self-check failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace regext
