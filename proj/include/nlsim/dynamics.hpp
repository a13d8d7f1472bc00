#pragma once

#include <filesystem>
#include <functional>
#include <string>

#include "nlsim/field.hpp"
#include "nlsim/trajectory.hpp"

namespace nlsim {

/// e^{it Delta}: multiplies the spectrum by exp(-i t |xi|^2).
Field linear_flow(const Field& f, double t);

/// Exact flow of i u_t = |u|^{2k} u over dt: u exp(-i dt |u|^{2k}).
Field nonlinear_phase(const Field& f, double dt, int k);

/// One Strang step  L(dt/2) N(dt) L(dt/2). With params.dealias the phase
/// uses the alias-free band projection of |u|^{2k}. Throws
/// InstabilityError naming `step_index` on non-finite output.
Field strang_step(const Field& f, const EvolutionParams& params, long step_index = 0);

/// Called with (sample index, t, state) for every sample including t = 0.
using SampleObserver = std::function<void(std::size_t, double, const Field&)>;

/// evolve() without storing the states; returns the warnings.
std::vector<std::string> evolve_streaming(const Field& u0, const EvolutionParams& params,
                                          const SampleObserver& observer);

/// Integrates from t = 0, keeping every sample_every-th state. Throws
/// InstabilityError on NaN or on max|u| above 1e6 times its initial value.
/// A Nyquist-shell spectral tail above 1e-4 of the peak adds a warning.
Trajectory evolve(const Field& u0, const EvolutionParams& params,
                  std::string provenance = "");

/// int |u|^2.
double mass(const Field& f);
/// 1/2 int |grad u|^2 + 1/(2k+2) int |u|^{2k+2}; gradient term spectral.
double energy(const Field& f, int k);
double kinetic_energy(const Field& f);
double potential_energy(const Field& f, int k);

/// Fraction of mass in |x| > L/4 (periodic wrap-around indicator).
double tail_mass_fraction(const Field& f);

/// Writes one field file per sample plus "manifest.txt" with lines
/// "<index> <t> <file>" into `dir`.
void write_checkpoints(const std::filesystem::path& dir, const Trajectory& traj);

}  // namespace nlsim
