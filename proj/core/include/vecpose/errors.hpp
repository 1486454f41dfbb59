#pragma once

#include <stdexcept>

namespace vecpose {

/// Argument lies outside the validity range (or image) of a generating function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A parameterization quantity or matrix factor is singular at the requested point.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coupling coefficients violate the consistency conditions of the pose mapping.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Normal equations are singular or too ill-conditioned to solve reliably.
class DegenerateGeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vecpose
