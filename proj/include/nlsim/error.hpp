#pragma once

#include <stdexcept>
#include <string>

namespace nlsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation received a field in the wrong physical/frequency representation.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The grid cannot resolve what was asked of it (cutoff at or above Nyquist,
/// width below four cells, spectral tail too large, ...).
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Time stepping produced non-finite values or runaway growth.
class InstabilityError : public Error {
 public:
  using Error::Error;
};

/// Requested time interval is not covered by the trajectory samples.
class CoverageError : public Error {
 public:
  using Error::Error;
};

/// Too few samples for the temporal quadrature.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace nlsim
