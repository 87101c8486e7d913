#pragma once

#include <stdexcept>
#include <string>

namespace jtheta {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iterative method failed to bracket or converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed result is not representable (e.g. factorial overflow).
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Numerical result violated an internal invariant by more than round-off.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace jtheta
