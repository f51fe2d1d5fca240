#pragma once

#include <stdexcept>
#include <string>

namespace su2cs {

/// Raised when an argument lies outside the mathematical domain of an
/// operation (negative temperature, invalid (j, mu) pair, theta >= pi, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a caller breaks a stated precondition on an otherwise
/// well-typed input (non-Hermitian matrix passed to the Hermitian solver,
/// unnormalized state handed to the propagator).
class ContractError : public std::invalid_argument {
 public:
  explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace su2cs
