#include "nlsim/field.hpp"

#include <cmath>
#include <string>

#include "nlsim/error.hpp"

namespace nlsim {

const char* to_string(Rep rep) { return rep == Rep::physical ? "physical" : "frequency"; }

Field::Field(Grid grid, std::vector<cplx> samples, Rep rep)
    : grid_(grid), samples_(std::move(samples)), rep_(rep) {
  if (samples_.size() != grid_.size())
    throw DomainError("field has " + std::to_string(samples_.size()) + " samples, grid needs " +
                      std::to_string(grid_.size()));
  for (const cplx& z : samples_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw DomainError("field samples must be finite");
}

Field Field::zeros(const Grid& grid, Rep rep) {
  return Field(grid, std::vector<cplx>(grid.size()), rep);
}

Field subtract(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) throw DomainError("subtract: grids differ");
  if (a.rep() != b.rep()) throw RepresentationError("subtract: representations differ");
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return Field(a.grid(), std::move(out), a.rep());
}

Field conjugate(const Field& f) {
  if (f.rep() != Rep::physical) throw RepresentationError("conjugate expects a physical field");
  std::vector<cplx> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::conj(f[i]);
  return Field(f.grid(), std::move(out), Rep::physical);
}

Field scale(const Field& f, cplx factor) {
  std::vector<cplx> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = factor * f[i];
  return Field(f.grid(), std::move(out), f.rep());
}

}  // namespace nlsim
