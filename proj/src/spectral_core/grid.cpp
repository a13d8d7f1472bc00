#include "nlsim/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nlsim/error.hpp"

namespace nlsim {

Grid::Grid(int dim, double extent, int points_per_axis)
    : dim_(dim), extent_(extent), n_(points_per_axis), size_(1) {
  if (dim != 1 && dim != 2 && dim != 3) throw DomainError("grid dimension must be 1, 2 or 3");
  if (!(extent > 0.0) || !std::isfinite(extent)) throw DomainError("grid extent must be positive");
  if (points_per_axis < 2 || points_per_axis % 2 != 0)
    throw DomainError("points per axis must be even and positive");
  for (int a = 0; a < dim; ++a) size_ *= static_cast<std::size_t>(n_);
}

double Grid::cell_volume() const { return std::pow(spacing(), dim_); }
double Grid::box_volume() const { return std::pow(extent_, dim_); }
double Grid::freq_spacing() const { return 2.0 * std::numbers::pi / extent_; }
double Grid::freq_cell_volume() const { return std::pow(freq_spacing(), dim_); }
double Grid::nyquist() const { return std::numbers::pi * n_ / extent_; }

std::array<int, 3> Grid::unravel(std::size_t index) const {
  std::array<int, 3> s{0, 0, 0};
  for (int a = dim_ - 1; a >= 0; --a) {
    s[a] = static_cast<int>(index % n_);
    index /= n_;
  }
  return s;
}

std::size_t Grid::ravel(const std::array<int, 3>& slots) const {
  std::size_t idx = 0;
  for (int a = 0; a < dim_; ++a) idx = idx * n_ + static_cast<std::size_t>(slots[a]);
  return idx;
}

long Grid::mode_norm2(std::size_t index) const {
  long q = 0;
  for (int a = dim_ - 1; a >= 0; --a) {
    const long m = wavenumber(static_cast<int>(index % n_));
    q += m * m;
    index /= n_;
  }
  return q;
}

long Grid::max_mode_norm2() const {
  const long h = n_ / 2;
  return dim_ * h * h;
}

long Grid::position_norm2(std::size_t index) const {
  long q = 0;
  for (int a = dim_ - 1; a >= 0; --a) {
    const long c = static_cast<long>(index % n_) - n_ / 2;
    q += c * c;
    index /= n_;
  }
  return q;
}

double Grid::radius(std::size_t index) const {
  return spacing() * std::sqrt(static_cast<double>(position_norm2(index)));
}

double Grid::freq_norm(std::size_t index) const {
  return freq_spacing() * std::sqrt(static_cast<double>(mode_norm2(index)));
}

void Grid::require_below_nyquist(double cutoff, std::string_view what) const {
  if (!(cutoff < nyquist())) {
    std::ostringstream msg;
    msg << what << ": cutoff " << cutoff << " not below grid Nyquist " << nyquist()
        << " (n=" << n_ << ", L=" << extent_ << ")";
    throw ResolutionError(msg.str());
  }
}

Grid Grid::refined(int factor) const {
  if (factor < 1) throw DomainError("refinement factor must be >= 1");
  return Grid(dim_, extent_, n_ * factor);
}

Grid Grid::scaled_extent(double factor) const { return Grid(dim_, extent_ / factor, n_); }

}  // namespace nlsim
