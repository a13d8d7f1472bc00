#pragma once

#include <cstddef>
#include <span>

namespace nlsim {

/// Unweighted least-squares line y = intercept + slope x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double rms_residual = 0.0;
  std::size_t samples = 0;
};

/// Throws DomainError for fewer than two points or constant x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);
/// Fit of log y against log x; all values must be positive.
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

double median(std::span<const double> values);

}  // namespace nlsim
