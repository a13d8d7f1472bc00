#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlsim {

enum class Quadrature { trapezoid };

/// Named scalar time series. Times strictly increasing, values finite.
struct DiagnosticSeries {
  std::string name;
  std::vector<double> times;
  std::vector<double> values;
  Quadrature quadrature = Quadrature::trapezoid;

  void validate() const;
  void push(double t, double v);
  double integral() const;
  double max() const;
};

/// CSV: header "t,<name>", then one "%.17g,%.17g" row per sample.
void write_csv(std::ostream& os, const DiagnosticSeries& series);

}  // namespace nlsim
