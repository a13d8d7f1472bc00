#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlsim/field.hpp"

namespace nlsim {

/// Real function of |xi| applied as a Fourier multiplier. `cutoff`, when
/// set, is the largest frequency the symbol must resolve; applying it on a
/// grid whose Nyquist does not exceed it is a ResolutionError.
class RadialSymbol {
 public:
  RadialSymbol(std::string label, std::function<double(double)> evaluate,
               std::optional<double> cutoff = std::nullopt);

  double operator()(double r) const { return evaluate_(r); }
  const std::string& label() const { return label_; }
  std::optional<double> cutoff() const { return cutoff_; }

  /// Values at r = dxi sqrt(q) for every integer q in [0, d (n/2)^2].
  /// Throws DomainError on a non-finite value.
  std::vector<double> lattice_table(const Grid& grid) const;

  /// CSV "r,<label>" sampled at the given radii.
  void write_csv(std::ostream& os, std::span<const double> radii) const;

 private:
  std::string label_;
  std::function<double(double)> evaluate_;
  std::optional<double> cutoff_;
};

/// Multiplies the spectrum by s(|xi|); result in the caller's representation.
Field apply_symbol(const Field& f, const RadialSymbol& s);

/// I-operator symbol: 1 on r <= N, (N/r)^{1-s} on r >= 2N, and on (N, 2N)
/// the cubic Hermite interpolant in (log r, log m) with end slopes 0 and
/// -(1-s), which reduces to log m = -(1-s) ln2 * t^2 (2 - t), t = log2(r/N).
/// Throws DomainError unless 0 < s < 1 and N > 0.
RadialSymbol i_operator_symbol(double N, double s);

enum class Weight { homogeneous, inhomogeneous };

/// |xi|^s (homogeneous) or (1 + |xi|^2)^{s/2}. For homogeneous s < 0 the
/// zero mode is set to 0; for s = 0 the symbol is identically 1.
RadialSymbol derivative_symbol(double s, Weight weight = Weight::homogeneous);
Field fractional_derivative(const Field& f, double s, Weight weight = Weight::homogeneous);

/// Sharp cutoffs 1{|xi| <= cutoff} and 1{|xi| > cutoff}. low + high = f.
/// Throws DomainError for cutoff <= 0, ResolutionError at or above Nyquist.
Field low_pass(const Field& f, double cutoff);
Field high_pass(const Field& f, double cutoff);
RadialSymbol low_pass_symbol(double cutoff);
RadialSymbol high_pass_symbol(double cutoff);

/// Smoothed step: psi = 1 on r <= 1, 0 on r >= 2, and on (1,2)
/// 1 - B(2(r-1) - 1) / B(1) with B the primitive of exp(-1/(1-t^2)) from -1.
double lp_cutoff(double r);

/// Littlewood-Paley bank phi_j(xi) = psi(2^{-j} xi) - psi(2^{-j+1} xi).
class ProjectionBank {
 public:
  ProjectionBank(int j_min, int j_max);
  /// Range covering the lattice: from the fundamental frequency up to the
  /// corner of the frequency box.
  static ProjectionBank for_grid(const Grid& grid);

  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }
  bool contains(int j) const { return j >= j_min_ && j <= j_max_; }

  double psi(double r) const { return lp_cutoff(r); }
  double phi(int j, double r) const;
  RadialSymbol symbol(int j) const;
  /// psi(2^{-j_max} r) - psi(2^{-j_min+1} r), the telescoped sum.
  RadialSymbol band_symbol() const;

 private:
  int j_min_;
  int j_max_;
};

/// Throws DomainError if j is outside the bank.
Field lp_project(const Field& f, const ProjectionBank& bank, int j);

}  // namespace nlsim
