#include "nlsim/symbol.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "nlsim/error.hpp"
#include "nlsim/spectral.hpp"

namespace nlsim {

RadialSymbol::RadialSymbol(std::string label, std::function<double(double)> evaluate,
                           std::optional<double> cutoff)
    : label_(std::move(label)), evaluate_(std::move(evaluate)), cutoff_(cutoff) {}

std::vector<double> RadialSymbol::lattice_table(const Grid& grid) const {
  const long qmax = grid.max_mode_norm2();
  const double dxi = grid.freq_spacing();
  std::vector<double> table(static_cast<std::size_t>(qmax) + 1);
  for (long q = 0; q <= qmax; ++q) {
    const double v = evaluate_(dxi * std::sqrt(static_cast<double>(q)));
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "symbol '" << label_ << "' is not finite at |xi| = " << dxi * std::sqrt(double(q));
      throw DomainError(msg.str());
    }
    table[static_cast<std::size_t>(q)] = v;
  }
  return table;
}

void RadialSymbol::write_csv(std::ostream& os, std::span<const double> radii) const {
  os << "r," << label_ << '\n';
  char buf[64];
  for (double r : radii) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", r, evaluate_(r));
    os << buf;
  }
}

Field apply_symbol(const Field& f, const RadialSymbol& s) {
  const Grid& g = f.grid();
  if (s.cutoff()) g.require_below_nyquist(*s.cutoff(), s.label());
  const auto table = s.lattice_table(g);
  std::vector<cplx> spec = std::move(to_frequency(f)).release();
  for (std::size_t i = 0; i < spec.size(); ++i)
    spec[i] *= table[static_cast<std::size_t>(g.mode_norm2(i))];
  Field out(g, std::move(spec), Rep::frequency);
  return f.rep() == Rep::physical ? inverse_transform(out) : out;
}

RadialSymbol i_operator_symbol(double N, double s) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("I-operator: s must lie in (0, 1)");
  if (!(N > 0.0) || !std::isfinite(N)) throw DomainError("I-operator: N must be positive");
  const double a = -(1.0 - s) * std::numbers::ln2;
  auto m = [N, s, a](double r) {
    if (r <= N) return 1.0;
    if (r >= 2.0 * N) return std::pow(N / r, 1.0 - s);
    const double t = std::log2(r / N);
    return std::exp(a * t * t * (2.0 - t));
  };
  std::ostringstream label;
  label << "m_N(N=" << N << ",s=" << s << ")";
  return RadialSymbol(label.str(), m, 2.0 * N);
}

RadialSymbol derivative_symbol(double s, Weight weight) {
  std::ostringstream label;
  if (weight == Weight::homogeneous) {
    label << "|xi|^" << s;
    return RadialSymbol(label.str(), [s](double r) {
      if (s == 0.0) return 1.0;
      if (r == 0.0) return 0.0;
      return std::pow(r, s);
    });
  }
  label << "<xi>^" << s;
  return RadialSymbol(label.str(), [s](double r) { return std::pow(1.0 + r * r, 0.5 * s); });
}

Field fractional_derivative(const Field& f, double s, Weight weight) {
  return apply_symbol(f, derivative_symbol(s, weight));
}

namespace {

void check_cutoff(double cutoff) {
  if (!(cutoff > 0.0)) throw DomainError("sharp cutoff must be positive");
}

}  // namespace

RadialSymbol low_pass_symbol(double cutoff) {
  check_cutoff(cutoff);
  std::ostringstream label;
  label << "P_le(" << cutoff << ")";
  return RadialSymbol(label.str(), [cutoff](double r) { return r <= cutoff ? 1.0 : 0.0; },
                      cutoff);
}

RadialSymbol high_pass_symbol(double cutoff) {
  check_cutoff(cutoff);
  std::ostringstream label;
  label << "P_gt(" << cutoff << ")";
  return RadialSymbol(label.str(), [cutoff](double r) { return r <= cutoff ? 0.0 : 1.0; },
                      cutoff);
}

Field low_pass(const Field& f, double cutoff) { return apply_symbol(f, low_pass_symbol(cutoff)); }
Field high_pass(const Field& f, double cutoff) { return apply_symbol(f, high_pass_symbol(cutoff)); }

}  // namespace nlsim
