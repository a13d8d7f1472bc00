#include "nlsim/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nlsim/error.hpp"
#include "nlsim/spectral.hpp"

namespace nlsim {

double lebesgue_norm(const Field& f, double p) {
  if (!(p >= 1.0)) throw DomainError("lebesgue_norm: p must be >= 1");
  const Field u = to_physical(f);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& z : u.samples()) m = std::max(m, std::abs(z));
    return m;
  }
  double sum = 0.0;
  if (p == 2.0) {
    for (const cplx& z : u.samples()) sum += std::norm(z);
    return std::sqrt(sum * u.grid().cell_volume());
  }
  for (const cplx& z : u.samples()) sum += std::pow(std::abs(z), p);
  return std::pow(sum * u.grid().cell_volume(), 1.0 / p);
}

double sobolev_norm(const Field& f, double s, bool homogeneous) {
  const Field spec = to_frequency(f);
  const Grid& g = spec.grid();
  const double dxi2 = g.freq_spacing() * g.freq_spacing();
  std::vector<double> weight(static_cast<std::size_t>(g.max_mode_norm2()) + 1);
  for (std::size_t q = 0; q < weight.size(); ++q) {
    const double r2 = dxi2 * static_cast<double>(q);
    if (homogeneous) weight[q] = s == 0.0 ? 1.0 : (q == 0 ? 0.0 : std::pow(r2, s));
    else weight[q] = std::pow(1.0 + r2, s);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i)
    sum += weight[static_cast<std::size_t>(g.mode_norm2(i))] * std::norm(spec[i]);
  return std::sqrt(sum * g.freq_cell_volume());
}

namespace {

double trapezoid(const Trajectory& traj, std::size_t first, std::size_t last,
                 const std::vector<double>& g) {
  double acc = 0.0;
  for (std::size_t n = first; n < last; ++n)
    acc += 0.5 * (traj.samples[n + 1].t - traj.samples[n].t) * (g[n - first] + g[n + 1 - first]);
  return acc;
}

std::size_t locate(const Trajectory& traj, double t, double tol) {
  const auto& s = traj.samples;
  auto it = std::lower_bound(s.begin(), s.end(), t - tol,
                             [](const TrajectorySample& a, double v) { return a.t < v; });
  if (it == s.end() || std::abs(it->t - t) > tol) {
    std::ostringstream msg;
    msg << "time " << t << " is not a sample time of the trajectory";
    throw CoverageError(msg.str());
  }
  return static_cast<std::size_t>(it - s.begin());
}

}  // namespace

double mixed_norm(const Trajectory& traj, double p_time, double q_space, std::size_t first,
                  std::size_t last) {
  if (!(p_time >= 1.0) || !(q_space >= 1.0)) throw DomainError("mixed_norm: p, q must be >= 1");
  if (last >= traj.samples.size()) throw CoverageError("mixed_norm: sample range out of bounds");
  if (last <= first) throw QuadratureError("mixed_norm: need at least two samples");
  std::vector<double> g;
  g.reserve(last - first + 1);
  for (std::size_t n = first; n <= last; ++n) g.push_back(lebesgue_norm(traj.samples[n].field, q_space));
  if (std::isinf(p_time)) return *std::max_element(g.begin(), g.end());
  for (double& v : g) v = std::pow(v, p_time);
  return std::pow(trapezoid(traj, first, last, g), 1.0 / p_time);
}

double mixed_norm(const Trajectory& traj, const MixedNormSpec& spec) {
  if (traj.samples.size() < 2)
    throw QuadratureError("mixed_norm: trajectory has fewer than two samples");
  if (!(spec.t_b > spec.t_a)) throw DomainError("mixed_norm: interval must be nondegenerate");
  const double spacing = traj.samples[1].t - traj.samples[0].t;
  const double tol = 1e-9 * std::max(spacing, 1e-300);
  if (spec.t_a < traj.start_time() - tol || spec.t_b > traj.end_time() + tol) {
    std::ostringstream msg;
    msg << "interval [" << spec.t_a << ", " << spec.t_b << "] not covered by samples on ["
        << traj.start_time() << ", " << traj.end_time() << "]";
    throw CoverageError(msg.str());
  }
  return mixed_norm(traj, spec.p_time, spec.q_space, locate(traj, spec.t_a, tol),
                    locate(traj, spec.t_b, tol));
}

namespace {

// || |nabla|^{1/2} |u|^2 ||_{L^2_x}^2, with |u|^2 formed on the twice refined
// grid where its band fits without aliasing.
double half_derivative_density_sq(const Field& f) {
  const Grid& g = f.grid();
  const Grid fine = g.refined(2);
  const Field spec = to_frequency(f);
  const Field up = inverse_transform(Field(fine, pad_spectrum(g, spec.samples(), fine), Rep::frequency));
  std::vector<cplx> density(up.size());
  for (std::size_t i = 0; i < density.size(); ++i) density[i] = std::norm(up[i]);
  const Field rho = forward_transform(Field(fine, std::move(density), Rep::physical));
  double sum = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) sum += fine.freq_norm(i) * std::norm(rho[i]);
  return sum * fine.freq_cell_volume();
}

}  // namespace

double morawetz_quantity(const Trajectory& traj, int d) {
  if (d != 2 && d != 3) throw DomainError("morawetz_quantity: d must be 2 or 3");
  if (traj.samples.empty() || traj.samples.front().field.grid().dim() != d)
    throw DomainError("morawetz_quantity: dimension mismatch with trajectory grid");
  if (traj.samples.size() < 2) throw QuadratureError("morawetz_quantity: need two samples");
  std::vector<double> g;
  g.reserve(traj.samples.size());
  for (const auto& s : traj.samples) {
    if (d == 3) g.push_back(std::pow(lebesgue_norm(s.field, 4.0), 4.0));
    else g.push_back(half_derivative_density_sq(s.field));
  }
  return std::sqrt(trapezoid(traj, 0, traj.samples.size() - 1, g));
}

double weighted_radial_sup(const Field& f, double weight_power) {
  const Field u = to_physical(f);
  const Grid& g = u.grid();
  double best = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double w = weight_power == 0.0 ? 1.0 : std::pow(g.radius(i), weight_power);
    best = std::max(best, w * std::abs(u[i]));
  }
  return best;
}

bool strichartz_admissible(double p, double q, int d) {
  if (d != 2 && d != 3) throw DomainError("strichartz_admissible: d must be 2 or 3");
  const double ip = std::isinf(p) ? 0.0 : 1.0 / p;
  const double iq = std::isinf(q) ? 0.0 : 1.0 / q;
  constexpr double tol = 1e-12;
  if (d == 2) return p > 2.0 && std::abs(ip + iq - 0.5) <= tol;
  return p >= 2.0 && std::abs(2.0 * ip - 3.0 * (0.5 - iq)) <= tol;
}

}  // namespace nlsim
