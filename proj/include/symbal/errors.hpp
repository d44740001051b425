#pragma once

#include <stdexcept>
#include <string>

namespace symbal {

/// A caller passed arguments outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// The request is well-formed but exceeds the configured computational budget.
class BudgetError : public std::length_error {
 public:
  explicit BudgetError(const std::string& what) : std::length_error(what) {}
};

/// An internal cross-check between two independent computations disagreed.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace symbal
