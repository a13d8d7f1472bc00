#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "nlsim/dynamics.hpp"
#include "nlsim/error.hpp"
#include "nlsim/norms.hpp"
#include "nlsim/radial_data.hpp"
#include "nlsim/series.hpp"
#include "nlsim/spectral.hpp"
#include "nlsim/symbol.hpp"
#include "oracles.hpp"

using namespace nlsim;

namespace {

Trajectory constant_trajectory(const Field& f, double dt, int samples) {
  Trajectory tr;
  tr.params.dim = f.grid().dim();
  tr.params.dt = dt;
  tr.params.t_final = dt * (samples - 1);
  for (int i = 0; i < samples; ++i) tr.samples.push_back({i * dt, f});
  return tr;
}

Trajectory free_trajectory(const Field& u0, double dt, int samples) {
  Trajectory tr = constant_trajectory(u0, dt, 1);
  tr.params.t_final = dt * (samples - 1);
  for (int i = 1; i < samples; ++i) tr.samples.push_back({i * dt, linear_flow(u0, i * dt)});
  return tr;
}

Field constant_field(const Grid& g, cplx c) {
  return Field(g, std::vector<cplx>(g.size(), c), Rep::physical);
}

double direct_lp(const Field& f, double p) {
  double s = 0.0;
  for (const auto& z : f.samples()) s += std::pow(std::abs(z), p);
  return std::pow(s * f.grid().cell_volume(), 1.0 / p);
}

}  // namespace

TEST_CASE("Lebesgue norms") {
  const Grid g(3, 3.0, 8);
  const cplx c(0.6, -0.8);
  for (double p : {1.0, 2.0, 3.5, 4.0}) {
    CHECK(lebesgue_norm(constant_field(g, c), p) ==
          doctest::Approx(std::pow(g.box_volume(), 1.0 / p)).epsilon(1e-14));
  }
  CHECK(lebesgue_norm(constant_field(g, c), kInfinity) == doctest::Approx(1.0));
  CHECK(lebesgue_norm(Field::zeros(g, Rep::physical), 2.0) == 0.0);
  CHECK_THROWS_AS(lebesgue_norm(constant_field(g, c), 0.5), DomainError);

  for (int d : {2, 3}) {
    const Grid h(d, 24.0, 48);
    const Field gauss = make_radial_data(h, {ProfileKind::gaussian, 1.0, 2.0, 0});
    for (double p : {2.0, 4.0}) CHECK(std::abs(lebesgue_norm(gauss, p) - direct_lp(gauss, p)) <=
                                      1e-12 * direct_lp(gauss, p));
  }
}

TEST_CASE("Sobolev norms") {
  const Grid g(2, 9.0, 32);
  std::vector<cplx> v(g.size());
  const cplx amp(1.2, 0.5);
  const int m0 = 3, m1 = -2;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto x = oracle::position(g, i);
    v[i] = amp * std::polar(1.0, g.freq_spacing() * (m0 * x[0] + m1 * x[1]));
  }
  const Field mode(g, v, Rep::physical);
  const double xi = g.freq_spacing() * std::sqrt(double(m0 * m0 + m1 * m1));
  for (double s : {0.5, 1.0, 1.7}) {
    CHECK(sobolev_norm(mode, s) ==
          doctest::Approx(std::abs(amp) * std::pow(xi, s) * std::sqrt(g.box_volume())).epsilon(1e-12));
    CHECK(sobolev_norm(mode, s, false) ==
          doctest::Approx(std::abs(amp) * std::pow(1 + xi * xi, s / 2) * std::sqrt(g.box_volume()))
              .epsilon(1e-12));
  }
  const Field f = oracle::random_field(g, 5);
  CHECK(sobolev_norm(f, 0.0) == doctest::Approx(lebesgue_norm(f, 2.0)).epsilon(1e-12));
  CHECK(sobolev_norm(to_frequency(f), 0.0) == doctest::Approx(lebesgue_norm(f, 2.0)).epsilon(1e-12));
}

TEST_CASE("mixed norms: constant integrand and coverage contract") {
  const Grid g(2, 5.0, 16);
  const Field f = oracle::random_field(g, 6);
  const Trajectory tr = constant_trajectory(f, 0.05, 21);
  const double lq = lebesgue_norm(f, 4.0);
  CHECK(mixed_norm(tr, {4.0, 4.0, 0.0, 1.0}) == doctest::Approx(lq).epsilon(1e-12));
  CHECK(mixed_norm(tr, {2.0, 4.0, 0.25, 0.75}) == doctest::Approx(std::sqrt(0.5) * lq).epsilon(1e-12));
  CHECK(mixed_norm(tr, {kInfinity, 4.0, 0.0, 1.0}) == doctest::Approx(lq).epsilon(1e-12));
  CHECK_THROWS_AS(mixed_norm(tr, {4.0, 4.0, 0.5, 0.5}), DomainError);
  CHECK_THROWS_AS(mixed_norm(constant_trajectory(f, 0.05, 1), {4.0, 4.0, 0.0, 0.0}), QuadratureError);
  CHECK_THROWS_AS(mixed_norm(tr, {4.0, 4.0, 0.0, 2.0}), CoverageError);
  CHECK_THROWS_AS(mixed_norm(tr, {0.5, 4.0, 0.0, 1.0}), DomainError);
}

TEST_CASE("mixed norms: refinement and inclusion monotonicity") {
  const Grid g(2, 24.0, 64);
  const Field u0 = make_radial_data(g, {ProfileKind::gaussian, 1.0, 1.5, 0});
  const Trajectory coarse = free_trajectory(u0, 0.04, 26);
  const Trajectory fine = free_trajectory(u0, 0.01, 101);
  const double a = mixed_norm(coarse, {4.0, 4.0, 0.0, 1.0});
  const double b = mixed_norm(fine, {4.0, 4.0, 0.0, 1.0});
  CHECK(std::abs(a - b) <= 0.01 * b);
  const Trajectory half = free_trajectory(u0, 0.02, 51);
  CHECK(std::abs(mixed_norm(half, {4.0, 4.0, 0.0, 1.0}) - b) <= 0.01 * b);

  double prev = 0.0;
  for (double tb : {0.2, 0.4, 0.6, 1.0}) {
    const double v = mixed_norm(fine, {4.0, 4.0, 0.0, tb});
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("interaction Morawetz quantity") {
  const Grid g3(3, 6.0, 16);
  const Field f = oracle::random_field(Grid(3, 6.0, 8), 8);
  const Field u = to_physical(Field(g3, pad_spectrum(f.grid(), to_frequency(f).samples(), g3),
                                    Rep::frequency));
  const Trajectory tr = constant_trajectory(u, 0.1, 11);
  const double l4 = lebesgue_norm(u, 4.0);
  CHECK(morawetz_quantity(tr, 3) == doctest::Approx(std::sqrt(1.0) * l4 * l4).epsilon(1e-12));
  CHECK(std::pow(morawetz_quantity(tr, 3), 2) == doctest::Approx(mixed_norm(tr, {4.0, 4.0, 0.0, 1.0}) *
                                                                 std::pow(mixed_norm(tr, {4.0, 4.0, 0.0, 1.0}), 3))
                                                     .epsilon(1e-10));
  CHECK(morawetz_quantity(constant_trajectory(Field::zeros(g3, Rep::physical), 0.1, 3), 3) == 0.0);

  const Grid g2(2, 8.0, 32);
  std::vector<cplx> v(g2.size());
  for (std::size_t i = 0; i < g2.size(); ++i)
    v[i] = 0.7 * std::polar(1.0, g2.freq_spacing() * 5 * oracle::position(g2, i)[1]);
  CHECK(morawetz_quantity(constant_trajectory(Field(g2, v, Rep::physical), 0.1, 5), 2) <= 1e-12);
  CHECK_THROWS_AS(morawetz_quantity(tr, 2), DomainError);

  // d = 2 against a direct computation of || |grad|^{1/2} |u|^2 ||_{L^2}
  const Field w = oracle::random_field(Grid(2, 8.0, 16), 9, 0.5);
  const Field wp = to_physical(Field(g2, pad_spectrum(w.grid(), to_frequency(w).samples(), g2),
                                     Rep::frequency));
  std::vector<cplx> rho(g2.size());
  for (std::size_t i = 0; i < g2.size(); ++i) rho[i] = std::norm(wp[i]);
  const double expect = lebesgue_norm(fractional_derivative(Field(g2, rho, Rep::physical), 0.5), 2.0);
  CHECK(morawetz_quantity(constant_trajectory(wp, 0.25, 5), 2) == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("weighted radial sup") {
  const Grid g(2, 16.0, 512);
  const double width = 1.0;  // e^{-r^2}
  const Field gauss = make_radial_data(g, {ProfileKind::gaussian, 1.0, width, 0});
  CHECK(weighted_radial_sup(gauss, 1.0) == doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::e)).epsilon(0.01));
  CHECK(weighted_radial_sup(gauss, 0.0) == lebesgue_norm(gauss, kInfinity));
  const Field bump = make_radial_data(Grid(2, 32.0, 512), {ProfileKind::smooth_bump, 1.0, 6.0, 0});
  const double ws = weighted_radial_sup(bump, 1.0);
  CHECK(ws > 0.0);
  CHECK(ws <= 12.0);
}

TEST_CASE("Strichartz admissibility") {
  CHECK(strichartz_admissible(4.0, 4.0, 2));
  CHECK(strichartz_admissible(2.0, 6.0, 3));
  CHECK(strichartz_admissible(10.0 / 3.0, 10.0 / 3.0, 3));
  CHECK(strichartz_admissible(kInfinity, 2.0, 3));
  CHECK(strichartz_admissible(kInfinity, 2.0, 2));
  for (double q : {2.0, 4.0, 8.0, kInfinity}) CHECK_FALSE(strichartz_admissible(2.0, q, 2));
  CHECK_FALSE(strichartz_admissible(4.0, 8.0, 2));
  CHECK_FALSE(strichartz_admissible(4.0, 4.0, 3));
  CHECK_THROWS_AS(strichartz_admissible(4.0, 4.0, 1), DomainError);
}

TEST_CASE("Hoelder interpolation across a random corpus") {
  const Grid g(2, 6.0, 16);
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Field f = oracle::random_field(g, 1000 + seed);
    const double q = 2.0, r = 8.0;
    for (double theta : {0.25, 0.5, 0.8}) {
      const double p = 1.0 / (theta / q + (1 - theta) / r);
      const double lhs = lebesgue_norm(f, p);
      const double rhs = std::pow(lebesgue_norm(f, q), theta) * std::pow(lebesgue_norm(f, r), 1 - theta);
      if (lhs > rhs * (1 + 1e-9)) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("low/high frequency interpolation bounds with unit constant") {
  const Grid g(2, 10.0, 32);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Field u = oracle::random_field(g, 500 + seed);
    for (double frac : {0.1, 0.3, 0.6}) {
      const double N = frac * g.nyquist();
      const Field lo = low_pass(u, N), hi = high_pass(u, N);
      CHECK(sobolev_norm(lo, 0.5) <=
            std::sqrt(sobolev_norm(u, 1.0) * lebesgue_norm(lo, 2.0)) * (1 + 1e-12));
      CHECK(sobolev_norm(hi, 0.5) <= sobolev_norm(u, 1.0) / std::sqrt(N) * (1 + 1e-12));
    }
  }
}

TEST_CASE("diagnostic series") {
  DiagnosticSeries s{"E", {}, {}};
  s.push(0.0, 1.0);
  s.push(0.5, 3.0);
  s.push(1.0, 1.0);
  CHECK(s.integral() == doctest::Approx(2.0));
  CHECK(s.max() == 3.0);
  CHECK_THROWS_AS(s.push(1.0, 2.0), DomainError);
  CHECK_THROWS_AS(s.push(2.0, NAN), DomainError);
  std::ostringstream os;
  write_csv(os, s);
  CHECK(os.str() == "t,E\n0,1\n0.5,3\n1,1\n");
}
