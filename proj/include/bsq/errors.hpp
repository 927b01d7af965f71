#pragma once

#include <stdexcept>
#include <string>

namespace bsq {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An iterative method (series, continued fraction, quadrature) failed to
// reach its tolerance within the iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A radial function is not known to lie in the weighted L1 space an
// operation requires, or its tail cannot be bounded.
class IntegrabilityError : public std::domain_error {
 public:
  explicit IntegrabilityError(const std::string& what) : std::domain_error(what) {}
};

// The integrand returned NaN or an infinity at an interior node.
class NonFiniteIntegrand : public std::runtime_error {
 public:
  explicit NonFiniteIntegrand(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bsq
