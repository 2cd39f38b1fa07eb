#pragma once

#include <stdexcept>
#include <string>

namespace cvqkd {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside its mathematical domain (negative x, eta outside (0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Matrix has the wrong shape or is not symmetric.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A covariance matrix violates the uncertainty principle.
class PhysicalityError : public Error {
 public:
  using Error::Error;
};

// Homodyne conditioning on a quadrature with nonpositive variance.
class DegenerateMeasurementError : public Error {
 public:
  using Error::Error;
};

// Prepare-and-measure parameters with no entanglement-based equivalent (sigma_x = 0).
class SingularMappingError : public Error {
 public:
  using Error::Error;
};

class UnsupportedConfigurationError : public Error {
 public:
  using Error::Error;
};

// An analytic shortcut was called outside the regime it is valid for.
class MethodMisuseError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cvqkd
