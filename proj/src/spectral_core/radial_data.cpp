#include "nlsim/radial_data.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "nlsim/error.hpp"
#include "nlsim/rng.hpp"
#include "nlsim/spectral.hpp"

namespace nlsim {

ProfileKind parse_profile_kind(const std::string& name) {
  if (name == "gaussian") return ProfileKind::gaussian;
  if (name == "smooth_bump") return ProfileKind::smooth_bump;
  if (name == "random_radial_superposition") return ProfileKind::random_radial_superposition;
  throw DomainError("unknown radial profile kind '" + name + "'");
}

const char* to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::gaussian: return "gaussian";
    case ProfileKind::smooth_bump: return "smooth_bump";
    case ProfileKind::random_radial_superposition: return "random_radial_superposition";
  }
  return "?";
}

double nyquist_tail_ratio(const Field& f) {
  const Field spec = to_frequency(f);
  const Grid& g = spec.grid();
  const int edge = -g.points_per_axis() / 2;
  double peak = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const double a = std::abs(spec[i]);
    peak = std::max(peak, a);
    const auto s = g.unravel(i);
    bool on_shell = false;
    for (int d = 0; d < g.dim(); ++d) on_shell = on_shell || g.wavenumber(s[d]) == edge;
    if (on_shell) tail = std::max(tail, a);
  }
  return peak > 0.0 ? tail / peak : 0.0;
}

namespace {

struct Term {
  double coefficient;
  double width;
  double wavenumber;
};

std::array<Term, kSuperpositionTerms> draw_terms(const RadialProfile& p) {
  CounterRng rng(p.seed, 0x7261646961ull);  // stream tag "radia"
  std::array<Term, kSuperpositionTerms> terms{};
  for (auto& t : terms) {
    t.coefficient = rng.normal();
    t.width = rng.uniform(p.width, 2.0 * p.width);
    t.wavenumber = rng.uniform(0.0, 2.0 / p.width);
  }
  return terms;
}

}  // namespace

Field make_radial_data(const Grid& grid, const RadialProfile& profile) {
  if (!(profile.width >= 4.0 * grid.spacing())) {
    std::ostringstream msg;
    msg << "radial profile width " << profile.width << " below 4 grid cells ("
        << 4.0 * grid.spacing() << ")";
    throw ResolutionError(msg.str());
  }
  const double a = profile.amplitude;
  const double w = profile.width;
  const double h2 = grid.spacing() * grid.spacing();
  const auto terms = draw_terms(profile);

  std::vector<cplx> samples(grid.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double r2 = h2 * static_cast<double>(grid.position_norm2(i));
    double v = 0.0;
    switch (profile.kind) {
      case ProfileKind::gaussian:
        v = a * std::exp(-r2 / (w * w));
        break;
      case ProfileKind::smooth_bump: {
        const double t2 = r2 / (4.0 * w * w);
        v = t2 < 1.0 ? a * std::exp(1.0 - 1.0 / (1.0 - t2)) : 0.0;
        break;
      }
      case ProfileKind::random_radial_superposition: {
        const double r = std::sqrt(r2);
        for (const Term& t : terms)
          v += t.coefficient * std::cos(t.wavenumber * r) * std::exp(-r2 / (t.width * t.width));
        v *= a;
        break;
      }
    }
    samples[i] = cplx(v, 0.0);
  }
  Field out(grid, std::move(samples), Rep::physical);
  if (const double tail = nyquist_tail_ratio(out); tail > 1e-10) {
    std::ostringstream msg;
    msg << to_string(profile.kind) << " profile (width " << w << ") unresolved: Nyquist tail "
        << tail << " of peak";
    throw ResolutionError(msg.str());
  }
  return out;
}

}  // namespace nlsim
