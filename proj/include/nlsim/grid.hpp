#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace nlsim {

/// Periodic box [-L/2, L/2)^d with n points per axis. Samples are stored
/// row-major (last axis fastest). Frequency slots follow FFT ordering: slot
/// i holds wavenumber m = i for i < n/2 and m = i - n otherwise, so the
/// lattice is xi_m = 2 pi m / L with m in [-n/2, n/2).
class Grid {
 public:
  Grid(int dim, double extent, int points_per_axis);

  int dim() const { return dim_; }
  double extent() const { return extent_; }
  int points_per_axis() const { return n_; }
  std::size_t size() const { return size_; }

  double spacing() const { return extent_ / n_; }
  double cell_volume() const;
  double box_volume() const;
  double freq_spacing() const;
  double freq_cell_volume() const;
  /// pi n / L, the largest per-axis frequency on the lattice.
  double nyquist() const;

  int wavenumber(int slot) const { return slot < n_ / 2 ? slot : slot - n_; }
  std::array<int, 3> unravel(std::size_t index) const;
  std::size_t ravel(const std::array<int, 3>& slots) const;

  /// Integer |m|^2 for the frequency slot at `index`.
  long mode_norm2(std::size_t index) const;
  /// Largest |m|^2 on the lattice, d (n/2)^2.
  long max_mode_norm2() const;
  /// Integer |i - n/2|^2 summed over axes; |x|^2 = spacing^2 times this.
  long position_norm2(std::size_t index) const;
  double radius(std::size_t index) const;
  double freq_norm(std::size_t index) const;

  /// Throws ResolutionError unless cutoff < nyquist().
  void require_below_nyquist(double cutoff, std::string_view what) const;

  /// Same box, factor times as many points per axis.
  Grid refined(int factor) const;
  /// Same point count, box extent divided by factor.
  Grid scaled_extent(double factor) const;

  bool operator==(const Grid&) const = default;

 private:
  int dim_;
  double extent_;
  int n_;
  std::size_t size_;
};

}  // namespace nlsim
