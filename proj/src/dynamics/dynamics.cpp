#include "nlsim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nlsim/error.hpp"
#include "nlsim/norms.hpp"
#include "nlsim/radial_data.hpp"
#include "nlsim/spectral.hpp"

namespace nlsim {

void EvolutionParams::validate() const {
  if (dim != 2 && dim != 3) throw DomainError("evolution: dim must be 2 or 3");
  if (k < 1) throw DomainError("evolution: k must be a positive integer");
  if (dim == 3 && k != 1) throw DomainError("evolution: d = 3 is the cubic equation, k must be 1");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("evolution: dt must be positive");
  if (!(t_final > 0.0) || !std::isfinite(t_final))
    throw DomainError("evolution: t_final must be positive");
  if (sample_every < 1) throw DomainError("evolution: sample_every must be >= 1");
}

long EvolutionParams::sample_count() const {
  const double intervals = t_final / (dt * sample_every);
  return static_cast<long>(std::ceil(intervals - 1e-9)) + 1;
}

long EvolutionParams::total_steps() const { return (sample_count() - 1) * sample_every; }

double default_time_step(const Grid& grid) { return 0.5 * grid.spacing() * grid.spacing(); }

namespace {

// exp(-i t |xi|^2) tabulated by integer |m|^2.
std::vector<cplx> propagator_table(const Grid& g, double t) {
  const double dxi2 = g.freq_spacing() * g.freq_spacing();
  std::vector<cplx> table(static_cast<std::size_t>(g.max_mode_norm2()) + 1);
  for (std::size_t q = 0; q < table.size(); ++q)
    table[q] = std::polar(1.0, -t * dxi2 * static_cast<double>(q));
  return table;
}

Field apply_propagator(const Field& f, const std::vector<cplx>& table) {
  const Grid& g = f.grid();
  std::vector<cplx> spec = std::move(to_frequency(f)).release();
  for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= table[static_cast<std::size_t>(g.mode_norm2(i))];
  Field out(g, std::move(spec), Rep::frequency);
  return f.rep() == Rep::physical ? inverse_transform(out) : out;
}

double int_pow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

class StrangStepper {
 public:
  StrangStepper(const Grid& grid, const EvolutionParams& p)
      : params_(p), half_(propagator_table(grid, 0.5 * p.dt)) {}

  Field step(const Field& u, long step_index) const {
    try {
      Field v = apply_propagator(to_physical(u), half_);
      v = phase(v, step_index);
      return apply_propagator(v, half_);
    } catch (const DomainError& e) {
      std::ostringstream msg;
      msg << "non-finite state at step " << step_index << ": " << e.what();
      throw InstabilityError(msg.str());
    }
  }

 private:
  Field phase(const Field& v, long step_index) const {
    const int k = params_.k;
    std::vector<cplx> out(v.size());
    if (params_.dealias) {
      const Field potential = dealiased_modulus_power(v, 2 * k);
      for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = v[i] * std::polar(1.0, -params_.dt * potential[i].real());
    } else {
      for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = v[i] * std::polar(1.0, -params_.dt * int_pow(std::norm(v[i]), k));
    }
    for (const cplx& z : out)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        std::ostringstream msg;
        msg << "non-finite state at step " << step_index;
        throw InstabilityError(msg.str());
      }
    return Field(v.grid(), std::move(out), Rep::physical);
  }

  EvolutionParams params_;
  std::vector<cplx> half_;
};

}  // namespace

Field linear_flow(const Field& f, double t) {
  if (t == 0.0) return f;
  return apply_propagator(f, propagator_table(f.grid(), t));
}

Field nonlinear_phase(const Field& f, double dt, int k) {
  if (k < 1) throw DomainError("nonlinear_phase: k must be >= 1");
  const Field u = to_physical(f);
  std::vector<cplx> out(u.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = u[i] * std::polar(1.0, -dt * int_pow(std::norm(u[i]), k));
  return Field(u.grid(), std::move(out), Rep::physical);
}

Field strang_step(const Field& f, const EvolutionParams& params, long step_index) {
  params.validate();
  return StrangStepper(f.grid(), params).step(f, step_index);
}

std::vector<std::string> evolve_streaming(const Field& u0, const EvolutionParams& params,
                                          const SampleObserver& observer) {
  params.validate();
  if (u0.grid().dim() != params.dim)
    throw DomainError("evolve: datum dimension differs from params.dim");
  std::vector<std::string> warnings;
  Field u = to_physical(u0);
  const double initial_sup = lebesgue_norm(u, kInfinity);
  const StrangStepper stepper(u.grid(), params);
  const long samples = params.sample_count();
  observer(0, 0.0, u);
  long step = 0;
  for (long s = 1; s < samples; ++s) {
    for (int r = 0; r < params.sample_every; ++r) {
      u = stepper.step(u, step);
      ++step;
      if (initial_sup > 0.0) {
        const double sup = lebesgue_norm(u, kInfinity);
        if (sup > 1e6 * initial_sup) {
          std::ostringstream msg;
          msg << "max|u| grew to " << sup << " (initial " << initial_sup << ") at step " << step;
          throw InstabilityError(msg.str());
        }
      }
    }
    const double t = static_cast<double>(step) * params.dt;
    if (warnings.empty()) {
      if (const double tail = nyquist_tail_ratio(u); tail > 1e-4) {
        std::ostringstream msg;
        msg << "resolution: Nyquist spectral tail " << tail << " of peak at t=" << t;
        warnings.push_back(msg.str());
      }
    }
    observer(static_cast<std::size_t>(s), t, u);
  }
  return warnings;
}

Trajectory evolve(const Field& u0, const EvolutionParams& params, std::string provenance) {
  Trajectory traj{params, {}, std::move(provenance), {}};
  traj.samples.reserve(static_cast<std::size_t>(std::max(1L, params.sample_count())));
  traj.warnings = evolve_streaming(u0, params, [&](std::size_t, double t, const Field& u) {
    traj.samples.push_back({t, u});
  });
  return traj;
}

double mass(const Field& f) {
  const double l2 = lebesgue_norm(f, 2.0);
  return l2 * l2;
}

double kinetic_energy(const Field& f) {
  const Field spec = to_frequency(f);
  const Grid& g = spec.grid();
  const double dxi2 = g.freq_spacing() * g.freq_spacing();
  double sum = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i)
    sum += static_cast<double>(g.mode_norm2(i)) * std::norm(spec[i]);
  return 0.5 * dxi2 * sum * g.freq_cell_volume();
}

double potential_energy(const Field& f, int k) {
  if (k < 1) throw DomainError("potential_energy: k must be >= 1");
  const Field u = to_physical(f);
  double sum = 0.0;
  for (const cplx& z : u.samples()) sum += int_pow(std::norm(z), k + 1);
  return sum * u.grid().cell_volume() / (2.0 * k + 2.0);
}

double energy(const Field& f, int k) { return kinetic_energy(f) + potential_energy(f, k); }

double tail_mass_fraction(const Field& f) {
  const Field u = to_physical(f);
  const Grid& g = u.grid();
  const double quarter = 0.25 * g.extent();
  double total = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double m = std::norm(u[i]);
    total += m;
    if (g.radius(i) > quarter) tail += m;
  }
  return total > 0.0 ? tail / total : 0.0;
}

}  // namespace nlsim
