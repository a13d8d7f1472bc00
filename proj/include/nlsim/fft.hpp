#pragma once

#include <span>

#include "nlsim/field.hpp"
#include "nlsim/grid.hpp"

namespace nlsim::fft {

enum class Direction { forward, backward };

/// Unnormalized in-place DFT over the grid's axes:
/// forward sums x_j e^{-2 pi i j k / n}, backward uses e^{+...}.
/// Plans are created once per (shape, direction) and shared; planning is
/// serialized, execution is reentrant.
void execute(const Grid& grid, std::span<cplx> data, Direction dir);

}  // namespace nlsim::fft
