#pragma once

#include <cstdint>

#include "nlsim/field.hpp"

namespace nlsim {

/// Complex normal coefficients on |xi| <= kappa, kappa drawn uniformly in
/// [band_lo, band_hi] * Nyquist; normalized to unit L^2. Stream `index` of
/// the counter generator keyed by `seed`.
Field random_band_field(const Grid& grid, std::uint64_t seed, std::uint64_t index,
                        double band_lo = 0.2, double band_hi = 0.5);

/// Random radial superposition of width four cells, unit L^2; the seed
/// varies the component widths, wavenumbers and coefficients.
Field random_radial_field(const Grid& grid, std::uint64_t seed, std::uint64_t index);

}  // namespace nlsim
