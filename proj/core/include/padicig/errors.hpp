#pragma once

#include <stdexcept>
#include <string>

namespace padicig {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quantity is zero at the working precision and cannot be decided.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

/// A reduction level exceeds the precision carried by the input.
class PrecisionTooLow : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A polynomial vanishes identically at its working precision.
class IdenticallyZeroAtPrecision : public Error {
 public:
  using Error::Error;
};

/// Adaptive root counting hit its precision cap without certifying.
class CertificationCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Certified local dimension disagrees with the claimed dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Some F_p-point of the set has a non-unit normalized Jacobian.
class NotSmoothModP : public Error {
 public:
  using Error::Error;
};

class DomainViolation : public Error {
 public:
  using Error::Error;
};

class NonConstantJacobian : public Error {
 public:
  using Error::Error;
};

class IsometryViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace padicig
