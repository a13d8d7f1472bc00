#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "nlsim/error.hpp"
#include "nlsim/symbol.hpp"

namespace nlsim {
namespace {

double bump(double t) { return std::abs(t) < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0; }

constexpr int kNodes = 256;

double segment(double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate(bump, a, b, 0);
}

// Primitive of the bump at equispaced nodes on [-1, 1]; each evaluation then
// integrates only the remaining partial segment.
const std::array<double, kNodes + 1>& node_primitive() {
  static const auto table = [] {
    std::array<double, kNodes + 1> t{};
    for (int i = 0; i < kNodes; ++i) {
      const double a = -1.0 + 2.0 * i / kNodes, b = -1.0 + 2.0 * (i + 1) / kNodes;
      t[i + 1] = t[i] + segment(a, b);
    }
    return t;
  }();
  return table;
}

double bump_primitive(double x) {
  if (x <= -1.0) return 0.0;
  const auto& t = node_primitive();
  if (x >= 1.0) return t[kNodes];
  const int i = std::min(kNodes - 1, static_cast<int>((x + 1.0) * kNodes / 2.0));
  return t[i] + segment(-1.0 + 2.0 * i / kNodes, x);
}

}  // namespace

double lp_cutoff(double r) {
  r = std::abs(r);
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  // the bump is even, so 1 - B(x)/B(1) = B(-x)/B(1) with x = 2r - 3
  return std::clamp(bump_primitive(3.0 - 2.0 * r) / node_primitive()[kNodes], 0.0, 1.0);
}

ProjectionBank::ProjectionBank(int j_min, int j_max) : j_min_(j_min), j_max_(j_max) {
  if (j_max < j_min) throw DomainError("projection bank: empty j range");
}

ProjectionBank ProjectionBank::for_grid(const Grid& grid) {
  const int lo = static_cast<int>(std::floor(std::log2(grid.freq_spacing())));
  const double corner = grid.nyquist() * std::sqrt(static_cast<double>(grid.dim()));
  const int hi = static_cast<int>(std::ceil(std::log2(corner)));
  return ProjectionBank(lo, hi);
}

double ProjectionBank::phi(int j, double r) const {
  return lp_cutoff(std::ldexp(r, -j)) - lp_cutoff(std::ldexp(r, -j + 1));
}

RadialSymbol ProjectionBank::symbol(int j) const {
  if (!contains(j)) {
    std::ostringstream msg;
    msg << "projection index " << j << " outside [" << j_min_ << ", " << j_max_ << "]";
    throw DomainError(msg.str());
  }
  std::ostringstream label;
  label << "phi_" << j;
  return RadialSymbol(label.str(), [j](double r) {
    return lp_cutoff(std::ldexp(r, -j)) - lp_cutoff(std::ldexp(r, -j + 1));
  });
}

RadialSymbol ProjectionBank::band_symbol() const {
  const int lo = j_min_, hi = j_max_;
  return RadialSymbol("lp_band", [lo, hi](double r) {
    return lp_cutoff(std::ldexp(r, -hi)) - lp_cutoff(std::ldexp(r, -lo + 1));
  });
}

Field lp_project(const Field& f, const ProjectionBank& bank, int j) {
  return apply_symbol(f, bank.symbol(j));
}

}  // namespace nlsim
