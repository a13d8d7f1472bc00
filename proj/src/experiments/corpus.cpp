#include "nlsim/corpus.hpp"

#include <cmath>

#include "nlsim/norms.hpp"
#include "nlsim/radial_data.hpp"
#include "nlsim/rng.hpp"
#include "nlsim/spectral.hpp"

namespace nlsim {

namespace {

Field unit_l2(const Field& f) {
  const double n = lebesgue_norm(f, 2.0);
  return n > 0.0 ? scale(f, 1.0 / n) : f;
}

}  // namespace

Field random_band_field(const Grid& grid, std::uint64_t seed, std::uint64_t index, double band_lo,
                        double band_hi) {
  CounterRng rng(seed, 0x636f72707573ull + index);  // "corpus"
  const double kappa = rng.uniform(band_lo, band_hi) * grid.nyquist();
  std::vector<cplx> spec(grid.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const double re = rng.normal(), im = rng.normal();
    if (grid.freq_norm(i) <= kappa) spec[i] = cplx(re, im);
  }
  return unit_l2(to_physical(Field(grid, std::move(spec), Rep::frequency)));
}

Field random_radial_field(const Grid& grid, std::uint64_t seed, std::uint64_t index) {
  CounterRng rng(seed, 0x72616469616cull + index);  // "radial"
  RadialProfile p;
  p.kind = ProfileKind::random_radial_superposition;
  p.width = 4.0 * grid.spacing();
  p.seed = rng.next_u64();
  return unit_l2(make_radial_data(grid, p));
}

}  // namespace nlsim
