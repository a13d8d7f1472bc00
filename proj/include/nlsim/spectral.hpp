#pragma once

#include <span>
#include <vector>

#include "nlsim/field.hpp"

namespace nlsim {

/// hat u(xi_m) = (2 pi)^{-d/2} dx^d sum_x u(x) e^{-i xi_m . x}, the grid
/// quadrature of the unitary Fourier transform. Throws RepresentationError
/// unless f is physical.
Field forward_transform(const Field& f);

/// u(x) = (2 pi)^{-d/2} dxi^d sum_m hat u(xi_m) e^{i xi_m . x}.
Field inverse_transform(const Field& f);

/// Converting views that pass through fields already in the target rep.
Field to_frequency(const Field& f);
Field to_physical(const Field& f);

/// |f|^{degree-1} f for odd degree >= 3, evaluated on a grid refined by
/// (degree+1)/2 per axis and truncated back. Alias-free on the band.
Field dealiased_power(const Field& f, int degree);

/// |f|^{power} for even power >= 2, same padding rule as dealiased_power
/// with power = degree - 1. Returned physical, imaginary parts dropped.
Field dealiased_modulus_power(const Field& f, int power);

/// Spectrum of `from` copied into the band of the larger grid `to`
/// (same extent), zeros elsewhere.
std::vector<cplx> pad_spectrum(const Grid& from, std::span<const cplx> spectrum,
                               const Grid& to);
/// Inverse of pad_spectrum: keeps only the band of the smaller grid `to`.
std::vector<cplx> truncate_spectrum(const Grid& from, std::span<const cplx> spectrum,
                                    const Grid& to);

/// Largest per-axis |m| carrying a coefficient above rel_tol * max |hat f|.
int max_excited_wavenumber(const Field& f, double rel_tol = 1e-14);

}  // namespace nlsim
