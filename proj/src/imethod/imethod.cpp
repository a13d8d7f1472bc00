#include "nlsim/imethod.hpp"

#include <cmath>
#include <sstream>

#include "nlsim/dynamics.hpp"
#include "nlsim/error.hpp"
#include "nlsim/norms.hpp"
#include "nlsim/spectral.hpp"

namespace nlsim {

double critical_index(int d, int k) {
  if (d == 3) return 0.5;
  if (d == 2) return 1.0 - 1.0 / k;
  throw DomainError("critical_index: d must be 2 or 3");
}

double vanishing_fraction(int k) {
  if (k < 1) throw DomainError("vanishing_fraction: k must be >= 1");
  return 1.0 / (2.0 * k + 2.0);
}

void IMethodConfig::validate() const {
  if (d != 2 && d != 3) throw DomainError("I-method: d must be 2 or 3");
  if (k < 1) throw DomainError("I-method: k must be >= 1");
  if (d == 3 && k != 1) throw DomainError("I-method: d = 3 requires k = 1");
  const double sc = critical_index(d, k);
  if (!(s > sc && s < 1.0)) {
    std::ostringstream msg;
    msg << "I-method: s = " << s << " must lie in (" << sc << ", 1)";
    throw DomainError(msg.str());
  }
  if (!(N > 0.0) || !std::isfinite(N)) throw DomainError("I-method: N must be positive");
}

void IMethodConfig::validate_on(const Grid& grid) const {
  validate();
  if (grid.dim() != d) throw DomainError("I-method: grid dimension differs from config");
  grid.require_below_nyquist(2.0 * N, "I-operator 2N");
}

double modified_energy(const Field& f, const IMethodConfig& cfg) {
  cfg.validate_on(f.grid());
  return energy(apply_symbol(f, cfg.symbol()), cfg.k);
}

namespace {

bool is_power_of_two(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) return false;
  int e = 0;
  return std::frexp(x, &e) == 0.5;
}

double scaling_exponent(const IMethodConfig& cfg) { return cfg.d == 3 ? 1.0 : 1.0 / cfg.k; }

}  // namespace

Field rescale(const Field& f, double lambda, const IMethodConfig& cfg) {
  if (!is_power_of_two(lambda))
    throw DomainError("rescale: lambda must be an integer power of two (grid-exact rescaling)");
  if (f.grid().dim() != cfg.d) throw DomainError("rescale: grid dimension differs from config");
  if (lambda == 1.0) return f;
  const Field u = to_physical(f);
  const double amp = std::pow(lambda, scaling_exponent(cfg));
  std::vector<cplx> samples(u.samples().begin(), u.samples().end());
  for (cplx& z : samples) z *= amp;
  return Field(u.grid().scaled_extent(lambda), std::move(samples), Rep::physical);
}

LambdaChoice choose_lambda(const Field& u0, const IMethodConfig& cfg) {
  cfg.validate();
  const double exponent = (cfg.s - 1.0) / (cfg.s - critical_index(cfg.d, cfg.k));
  LambdaChoice out{1.0, u0, 0.0, std::pow(cfg.N, exponent), true, {}};
  for (int m = 0; m <= 60; ++m) {
    const double lambda = std::ldexp(1.0, -m);
    const Field candidate = rescale(u0, lambda, cfg);
    if (!(2.0 * cfg.N < candidate.grid().nyquist())) {
      std::ostringstream msg;
      msg << "choose_lambda: lambda = " << lambda << " pushes 2N = " << 2.0 * cfg.N
          << " above the rescaled Nyquist " << candidate.grid().nyquist()
          << " before E(I u_lambda) <= 1/2";
      throw ResolutionError(msg.str());
    }
    const double e = modified_energy(candidate, cfg);
    out.history.emplace_back(lambda, e);
    if (e <= 0.5) {
      out.lambda = lambda;
      out.rescaled = candidate;
      out.modified_energy = e;
      const double ratio = lambda / out.predicted_lambda;
      out.within_factor_4 = ratio >= 0.25 && ratio <= 4.0;
      return out;
    }
  }
  throw ResolutionError("choose_lambda: no admissible lambda down to 2^-60");
}

namespace {

void require_product_resolved(const Field& f, int k, const char* what) {
  const int m_max = max_excited_wavenumber(f);
  const long limit = static_cast<long>(k + 1) * f.grid().points_per_axis() / 2;
  if (static_cast<long>(2 * k + 1) * m_max > limit) {
    std::ostringstream msg;
    msg << what << ": degree-" << 2 * k + 1 << " product of wavenumber " << m_max
        << " exceeds padded Nyquist wavenumber " << limit;
    throw ResolutionError(msg.str());
  }
}

}  // namespace

Field commutator(const Field& f, const IMethodConfig& cfg) {
  cfg.validate_on(f.grid());
  require_product_resolved(f, cfg.k, "commutator");
  const RadialSymbol m = cfg.symbol();
  const int degree = 2 * cfg.k + 1;
  const Field iu = to_physical(apply_symbol(f, m));
  const Field lhs = dealiased_power(iu, degree);
  const Field rhs = to_physical(apply_symbol(dealiased_power(f, degree), m));
  return subtract(lhs, rhs);
}

VanishingCheck vanishing_identity_check(const Field& u, double M, int k, double fraction) {
  if (!(M > 0.0)) throw DomainError("vanishing check: M must be positive");
  if (!(fraction > 0.0)) throw DomainError("vanishing check: fraction must be positive");
  const Field low = to_physical(low_pass(u, fraction * M));
  require_product_resolved(low, k, "vanishing check");
  const Field power = dealiased_power(low, 2 * k + 1);
  VanishingCheck out;
  out.residual = lebesgue_norm(high_pass(power, M), 2.0);
  out.scale = std::pow(lebesgue_norm(low, kInfinity), 2 * k + 1) *
              std::sqrt(u.grid().box_volume());
  out.holds = out.residual <= 1e-12 * out.scale;
  return out;
}

DiagnosticSeries IncrementLedger::series() const {
  DiagnosticSeries s{"E_Iu", {}, {}, Quadrature::trapezoid};
  for (std::size_t i = 0; i < times.size(); ++i) s.push(times[i], modified_energy[i]);
  return s;
}

IncrementLedger increment_ledger(const Trajectory& traj, const IMethodConfig& cfg) {
  if (traj.samples.empty()) throw DomainError("increment_ledger: empty trajectory");
  cfg.validate_on(traj.samples.front().field.grid());
  std::vector<double> times, values;
  times.reserve(traj.samples.size());
  values.reserve(traj.samples.size());
  for (const auto& s : traj.samples) {
    times.push_back(s.t);
    values.push_back(modified_energy(s.field, cfg));
  }
  return increment_ledger(std::move(times), std::move(values));
}

IncrementLedger increment_ledger(std::vector<double> times, std::vector<double> modified_energy) {
  if (times.size() != modified_energy.size())
    throw DomainError("increment_ledger: times and values differ in length");
  IncrementLedger out;
  out.times = std::move(times);
  out.modified_energy = std::move(modified_energy);
  for (std::size_t i = 1; i < out.modified_energy.size(); ++i)
    out.total_variation += std::abs(out.modified_energy[i] - out.modified_energy[i - 1]);
  return out;
}

SamplingCheck check_sampling(const IncrementLedger& ledger) {
  SamplingCheck out;
  out.full = ledger.total_variation;
  const auto& e = ledger.modified_energy;
  std::size_t prev = 0;
  for (std::size_t i = 2; i < e.size(); i += 2) {
    out.halved += std::abs(e[i] - e[prev]);
    prev = i;
  }
  if (!e.empty() && prev != e.size() - 1) out.halved += std::abs(e.back() - e[prev]);
  out.relative_change = out.full > 0.0 ? std::abs(out.full - out.halved) / out.full : 0.0;
  out.adequate = out.relative_change < 0.05;
  return out;
}

std::vector<TimeInterval> interval_partition(const Trajectory& traj, double epsilon, int d) {
  if (!(epsilon > 0.0)) throw DomainError("interval_partition: epsilon must be positive");
  if (d != 2 && d != 3) throw DomainError("interval_partition: d must be 2 or 3");
  const auto& s = traj.samples;
  if (s.empty()) return {};
  if (s.size() == 1) return {TimeInterval{0, 0, s[0].t, s[0].t, 0.0, false}};

  const double q = d == 3 ? 4.0 : 8.0;
  // Cumulative trapezoid of ||u||_q^4, so the L^4_t norm of any sample range
  // is a difference of two entries.
  std::vector<double> cum(s.size(), 0.0);
  double prev = std::pow(lebesgue_norm(s[0].field, q), 4.0);
  for (std::size_t n = 1; n < s.size(); ++n) {
    const double g = std::pow(lebesgue_norm(s[n].field, q), 4.0);
    cum[n] = cum[n - 1] + 0.5 * (s[n].t - s[n - 1].t) * (prev + g);
    prev = g;
  }
  auto norm = [&](std::size_t a, std::size_t b) { return std::pow(std::max(cum[b] - cum[a], 0.0), 0.25); };

  std::vector<TimeInterval> out;
  const std::size_t last = s.size() - 1;
  std::size_t a = 0;
  while (a < last) {
    std::size_t b = a + 1;
    if (norm(a, b) > epsilon) {
      out.push_back({a, b, s[a].t, s[b].t, norm(a, b), true});
      a = b;
      continue;
    }
    while (b < last && norm(a, b + 1) <= epsilon) ++b;
    out.push_back({a, b, s[a].t, s[b].t, norm(a, b), false});
    a = b;
  }
  return out;
}

DiagnosticSeries scattering_diagnostic(const Trajectory& traj, double s) {
  std::ostringstream name;
  name << "pullback_cauchy_H" << s;
  DiagnosticSeries out{name.str(), {}, {}, Quadrature::trapezoid};
  if (traj.samples.size() < 2) return out;
  Field prev = to_frequency(linear_flow(traj.samples[0].field, -traj.samples[0].t));
  for (std::size_t n = 1; n < traj.samples.size(); ++n) {
    Field cur = to_frequency(linear_flow(traj.samples[n].field, -traj.samples[n].t));
    out.push(traj.samples[n].t, sobolev_norm(subtract(cur, prev), s, false));
    prev = std::move(cur);
  }
  return out;
}

}  // namespace nlsim
