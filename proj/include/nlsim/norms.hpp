#pragma once

#include <limits>

#include "nlsim/field.hpp"
#include "nlsim/trajectory.hpp"

namespace nlsim {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// (sum |u|^p dx^d)^{1/p}; p = inf gives max |u|. Throws DomainError for p < 1.
double lebesgue_norm(const Field& f, double p);

/// Frequency-side weighted L^2 norm with weight |xi|^{2s} or (1+|xi|^2)^s.
double sobolev_norm(const Field& f, double s, bool homogeneous = true);

struct MixedNormSpec {
  double p_time = 2.0;
  double q_space = 2.0;
  double t_a = 0.0;
  double t_b = 1.0;
};

/// L^p_t L^q_x on [t_a, t_b] by trapezoid in time over the samples in the
/// interval. The endpoints must coincide with sample times (CoverageError
/// otherwise) and at least two samples must fall inside (QuadratureError).
double mixed_norm(const Trajectory& traj, const MixedNormSpec& spec);

/// Same, over the contiguous sample range [first, last].
double mixed_norm(const Trajectory& traj, double p_time, double q_space, std::size_t first,
                  std::size_t last);

/// || |nabla|^{(3-d)/2} |u|^2 ||_{L^2_{t,x}} over the whole trajectory.
/// d = 3 reduces to (int ||u||_4^4 dt)^{1/2}; d = 2 squares on a twice
/// refined grid and applies |nabla|^{1/2} there.
double morawetz_quantity(const Trajectory& traj, int d);

/// max_x |x|^{weight_power} |f(x)|.
double weighted_radial_sup(const Field& f, double weight_power);

/// d = 2: 2 < p <= inf, 1/p + 1/q = 1/2.  d = 3: 2 <= p <= inf,
/// 2/p = 3(1/2 - 1/q). Equalities are checked to 1e-12.
bool strichartz_admissible(double p, double q, int d);

}  // namespace nlsim
