#pragma once

#include <complex>
#include <span>
#include <vector>

#include "nlsim/grid.hpp"

namespace nlsim {

using cplx = std::complex<double>;

enum class Rep { physical, frequency };

const char* to_string(Rep rep);

/// Complex samples on a Grid, tagged with their representation. Immutable
/// once built; samples are checked finite at construction.
class Field {
 public:
  Field(Grid grid, std::vector<cplx> samples, Rep rep);

  static Field zeros(const Grid& grid, Rep rep);

  const Grid& grid() const { return grid_; }
  Rep rep() const { return rep_; }
  std::span<const cplx> samples() const { return samples_; }
  const cplx& operator[](std::size_t i) const { return samples_[i]; }
  std::size_t size() const { return samples_.size(); }

  /// Moves the sample buffer out; the field is left empty.
  std::vector<cplx> release() && { return std::move(samples_); }

 private:
  Grid grid_;
  std::vector<cplx> samples_;
  Rep rep_;
};

/// Pointwise a - b, same grid and representation required.
Field subtract(const Field& a, const Field& b);
Field conjugate(const Field& f);
Field scale(const Field& f, cplx factor);

}  // namespace nlsim
