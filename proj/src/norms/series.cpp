#include "nlsim/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "nlsim/error.hpp"

namespace nlsim {

void DiagnosticSeries::validate() const {
  if (times.size() != values.size()) throw DomainError("series '" + name + "': length mismatch");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw DomainError("series '" + name + "': times must be strictly increasing");
  for (double v : values)
    if (!std::isfinite(v)) throw DomainError("series '" + name + "': non-finite value");
}

void DiagnosticSeries::push(double t, double v) {
  if (!times.empty() && !(t > times.back()))
    throw DomainError("series '" + name + "': times must be strictly increasing");
  if (!std::isfinite(v)) throw DomainError("series '" + name + "': non-finite value");
  times.push_back(t);
  values.push_back(v);
}

double DiagnosticSeries::integral() const {
  double acc = 0.0;
  for (std::size_t i = 1; i < times.size(); ++i)
    acc += 0.5 * (times[i] - times[i - 1]) * (values[i] + values[i - 1]);
  return acc;
}

double DiagnosticSeries::max() const {
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

void write_csv(std::ostream& os, const DiagnosticSeries& series) {
  os << "t," << series.name << '\n';
  char buf[64];
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", series.times[i], series.values[i]);
    os << buf;
  }
}

}  // namespace nlsim
