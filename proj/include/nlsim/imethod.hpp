#pragma once

#include <string>
#include <vector>

#include "nlsim/field.hpp"
#include "nlsim/series.hpp"
#include "nlsim/symbol.hpp"
#include "nlsim/trajectory.hpp"

namespace nlsim {

/// Critical Sobolev index: 1/2 for (d=3, k=1), 1 - 1/k for d = 2.
double critical_index(int d, int k);

/// Frequency fraction c(k) = 1/(2k+2) below which (2k+1)-fold products of a
/// band-limited field stay inside |xi| < M.
double vanishing_fraction(int k);

struct IMethodConfig {
  double N = 8.0;
  double s = 0.75;
  int k = 1;
  int d = 3;

  /// Throws DomainError unless s_c < s < 1, N > 0 and (d=3 => k=1).
  void validate() const;
  /// validate() plus 2N < Nyquist of `grid` (ResolutionError).
  void validate_on(const Grid& grid) const;
  RadialSymbol symbol() const { return i_operator_symbol(N, s); }
};

/// E(Iu) with the I-symbol of cfg.
double modified_energy(const Field& f, const IMethodConfig& cfg);

/// u_lambda(x) = lambda^alpha u(lambda x), alpha = 1 (d=3) or 1/k (d=2),
/// realized exactly by scaling the samples and dividing the box extent by
/// lambda. lambda must be an integer power of two (DomainError otherwise).
Field rescale(const Field& f, double lambda, const IMethodConfig& cfg);

struct LambdaChoice {
  double lambda = 1.0;
  Field rescaled;
  double modified_energy = 0.0;
  /// Asymptotic law lambda ~ N^{(s-1)/(s-s_c)} with unit constant.
  double predicted_lambda = 1.0;
  bool within_factor_4 = true;
  /// (lambda, E(I u_lambda)) for every candidate tried, in search order.
  std::vector<std::pair<double, double>> history;
};

/// Largest lambda = 2^{-m}, m >= 0, with E(I u_lambda) <= 1/2. Throws
/// ResolutionError once 2N would reach the Nyquist of the rescaled box.
LambdaChoice choose_lambda(const Field& u0, const IMethodConfig& cfg);

/// (Iu)^{2k+1} - I(|u|^{2k} u), both powers alias-free. Throws
/// ResolutionError if (2k+1) times the largest excited per-axis wavenumber
/// exceeds the padded grid's Nyquist wavenumber (k+1) n / 2.
Field commutator(const Field& f, const IMethodConfig& cfg);

struct VanishingCheck {
  bool holds = false;
  double residual = 0.0;   // || P_{>M} (P_{<=cM} u)^{2k+1} ||_{L^2}
  double scale = 0.0;      // ||P_{<=cM} u||_inf^{2k+1} |box|^{1/2}
};

/// Tests P_{>M}((P_{<= fraction M} u)^{2k+1}) = 0 to 1e-12 of scale.
VanishingCheck vanishing_identity_check(const Field& u, double M, int k, double fraction);
inline VanishingCheck vanishing_identity_check(const Field& u, double M, int k) {
  return vanishing_identity_check(u, M, k, vanishing_fraction(k));
}

struct IncrementLedger {
  std::vector<double> times;
  std::vector<double> modified_energy;
  double total_variation = 0.0;

  DiagnosticSeries series() const;
};

IncrementLedger increment_ledger(const Trajectory& traj, const IMethodConfig& cfg);
/// Ledger from already evaluated E(Iu(t_n)).
IncrementLedger increment_ledger(std::vector<double> times, std::vector<double> modified_energy);

struct SamplingCheck {
  double full = 0.0;
  double halved = 0.0;
  double relative_change = 0.0;
  bool adequate = true;  // relative_change < 5%
};

/// Compares the ledger's total variation against the one obtained from
/// every other sample.
SamplingCheck check_sampling(const IncrementLedger& ledger);

struct TimeInterval {
  std::size_t first = 0;  // sample indices
  std::size_t last = 0;
  double t_a = 0.0;
  double t_b = 0.0;
  double norm = 0.0;
  /// A single step already exceeds epsilon.
  bool atomic_violation = false;
};

/// Greedy maximal partition with L^4_{t,x} (d=3) or L^4_t L^8_x (d=2)
/// at most epsilon on each piece.
std::vector<TimeInterval> interval_partition(const Trajectory& traj, double epsilon, int d);

/// ||v(t_{n+1}) - v(t_n)||_{H^s} with v(t) = e^{-it Delta} u(t); times t_{n+1}.
DiagnosticSeries scattering_diagnostic(const Trajectory& traj, double s = 1.0);

}  // namespace nlsim
