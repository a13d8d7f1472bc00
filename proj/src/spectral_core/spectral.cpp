#include "nlsim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "nlsim/error.hpp"
#include "nlsim/fft.hpp"

namespace nlsim {
namespace {

// e^{-i xi_m x_0} with x_0 = -L/2 is (-1)^{m}; with n even the parity of m
// equals the parity of its slot.
void apply_origin_phase(const Grid& grid, std::span<cplx> data) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto s = grid.unravel(i);
    if ((s[0] + s[1] + s[2]) & 1) data[i] = -data[i];
  }
}

double forward_scale(const Grid& grid) {
  return grid.cell_volume() * std::pow(2.0 * std::numbers::pi, -0.5 * grid.dim());
}

double inverse_scale(const Grid& grid) {
  return grid.freq_cell_volume() * std::pow(2.0 * std::numbers::pi, -0.5 * grid.dim());
}

std::vector<cplx> forward_raw(const Grid& grid, std::vector<cplx> data) {
  fft::execute(grid, data, fft::Direction::forward);
  apply_origin_phase(grid, data);
  const double c = forward_scale(grid);
  for (cplx& z : data) z *= c;
  return data;
}

std::vector<cplx> inverse_raw(const Grid& grid, std::vector<cplx> data) {
  apply_origin_phase(grid, data);
  fft::execute(grid, data, fft::Direction::backward);
  const double c = inverse_scale(grid);
  for (cplx& z : data) z *= c;
  return data;
}

int wavenumber_to_slot(int m, int n) { return m >= 0 ? m : n + m; }

}  // namespace

Field forward_transform(const Field& f) {
  if (f.rep() != Rep::physical)
    throw RepresentationError("forward_transform expects a physical field");
  const Grid& g = f.grid();
  return Field(g, forward_raw(g, {f.samples().begin(), f.samples().end()}), Rep::frequency);
}

Field inverse_transform(const Field& f) {
  if (f.rep() != Rep::frequency)
    throw RepresentationError("inverse_transform expects a frequency field");
  const Grid& g = f.grid();
  return Field(g, inverse_raw(g, {f.samples().begin(), f.samples().end()}), Rep::physical);
}

Field to_frequency(const Field& f) { return f.rep() == Rep::frequency ? f : forward_transform(f); }
Field to_physical(const Field& f) { return f.rep() == Rep::physical ? f : inverse_transform(f); }

std::vector<cplx> pad_spectrum(const Grid& from, std::span<const cplx> spectrum, const Grid& to) {
  if (to.dim() != from.dim() || to.points_per_axis() < from.points_per_axis())
    throw DomainError("pad_spectrum: target grid must be at least as fine");
  std::vector<cplx> out(to.size());
  const int big = to.points_per_axis();
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    auto s = from.unravel(i);
    for (int a = 0; a < from.dim(); ++a) s[a] = wavenumber_to_slot(from.wavenumber(s[a]), big);
    out[to.ravel(s)] = spectrum[i];
  }
  return out;
}

std::vector<cplx> truncate_spectrum(const Grid& from, std::span<const cplx> spectrum,
                                    const Grid& to) {
  if (to.dim() != from.dim() || to.points_per_axis() > from.points_per_axis())
    throw DomainError("truncate_spectrum: target grid must be at most as fine");
  std::vector<cplx> out(to.size());
  const int big = from.points_per_axis();
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto s = to.unravel(i);
    for (int a = 0; a < to.dim(); ++a) s[a] = wavenumber_to_slot(to.wavenumber(s[a]), big);
    out[i] = spectrum[from.ravel(s)];
  }
  return out;
}

namespace {

// Evaluates `pointwise` on the grid refined by `factor` and returns the
// band-truncated spectrum on the original grid.
template <class Op>
std::vector<cplx> on_refined_grid(const Field& f, int factor, Op pointwise) {
  const Grid& g = f.grid();
  const Grid fine = g.refined(factor);
  const Field spec = to_frequency(f);
  std::vector<cplx> values = inverse_raw(fine, pad_spectrum(g, spec.samples(), fine));
  for (cplx& z : values) z = pointwise(z);
  return truncate_spectrum(fine, forward_raw(fine, std::move(values)), g);
}

}  // namespace

Field dealiased_power(const Field& f, int degree) {
  if (degree < 3 || degree % 2 == 0)
    throw DomainError("dealiased_power: degree must be odd and >= 3, got " +
                      std::to_string(degree));
  const int k = (degree - 1) / 2;
  auto spec = on_refined_grid(f, k + 1, [k](cplx z) {
    const double m2 = std::norm(z);
    double w = 1.0;
    for (int i = 0; i < k; ++i) w *= m2;
    return w * z;
  });
  return Field(f.grid(), inverse_raw(f.grid(), std::move(spec)), Rep::physical);
}

Field dealiased_modulus_power(const Field& f, int power) {
  if (power < 2 || power % 2 != 0)
    throw DomainError("dealiased_modulus_power: power must be even and >= 2");
  const int k = power / 2;
  auto spec = on_refined_grid(f, k + 1, [k](cplx z) {
    const double m2 = std::norm(z);
    double w = 1.0;
    for (int i = 0; i < k; ++i) w *= m2;
    return cplx(w, 0.0);
  });
  auto values = inverse_raw(f.grid(), std::move(spec));
  for (cplx& z : values) z = cplx(z.real(), 0.0);
  return Field(f.grid(), std::move(values), Rep::physical);
}

int max_excited_wavenumber(const Field& f, double rel_tol) {
  const Field spec = to_frequency(f);
  double peak = 0.0;
  for (const cplx& z : spec.samples()) peak = std::max(peak, std::abs(z));
  if (peak == 0.0) return 0;
  const Grid& g = spec.grid();
  int best = 0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (std::abs(spec[i]) <= rel_tol * peak) continue;
    const auto s = g.unravel(i);
    for (int a = 0; a < g.dim(); ++a) best = std::max(best, std::abs(g.wavenumber(s[a])));
  }
  return best;
}

}  // namespace nlsim
