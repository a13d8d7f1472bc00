#pragma once

#include <cstdint>
#include <string>

#include "nlsim/field.hpp"

namespace nlsim {

enum class ProfileKind { gaussian, smooth_bump, random_radial_superposition };

ProfileKind parse_profile_kind(const std::string& name);
const char* to_string(ProfileKind kind);

/// gaussian:   A exp(-r^2 / w^2)
/// smooth_bump: A exp(1 - 1/(1 - (r/2w)^2)) on r < 2w, zero outside
/// random_radial_superposition: A sum_j c_j cos(kappa_j r) exp(-r^2 / w_j^2)
///   with w_j in [w, 2w], kappa_j in [0, 2/w), c_j standard normal, drawn
///   from the counter-based generator keyed by `seed`.
struct RadialProfile {
  ProfileKind kind = ProfileKind::gaussian;
  double amplitude = 1.0;
  double width = 1.0;
  std::uint64_t seed = 0;
};

inline constexpr int kSuperpositionTerms = 4;

/// Samples the profile on the grid. r is computed from integer offsets so
/// lattice rotations/reflections about the origin permute samples exactly.
/// Throws ResolutionError if width < 4 cells or the spectrum at the
/// Nyquist shell exceeds 1e-10 of its peak.
Field make_radial_data(const Grid& grid, const RadialProfile& profile);

/// Ratio max |hat f| on the Nyquist shell / max |hat f|.
double nyquist_tail_ratio(const Field& f);

}  // namespace nlsim
