#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "nlsim/error.hpp"
#include "nlsim/norms.hpp"
#include "nlsim/radial_data.hpp"
#include "nlsim/spectral.hpp"
#include "nlsim/symbol.hpp"
#include "oracles.hpp"

using namespace nlsim;

namespace {

double inner_re(const Field& a, const Field& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (std::conj(a[i]) * b[i]).real();
  return s * a.grid().cell_volume();
}

double l2sq(const Field& f) { return std::pow(lebesgue_norm(f, 2.0), 2); }

Field single_mode(const Grid& g, std::array<int, 3> m, cplx amp = 1.0) {
  std::vector<cplx> spec(g.size());
  std::array<int, 3> slot{};
  for (int a = 0; a < g.dim(); ++a) slot[a] = (m[a] + g.points_per_axis()) % g.points_per_axis();
  spec[g.ravel(slot)] = amp;
  return to_physical(Field(g, spec, Rep::frequency));
}

double mode_radius(const Grid& g, std::array<int, 3> m) {
  double r2 = 0.0;
  for (int a = 0; a < g.dim(); ++a) r2 += double(m[a]) * m[a];
  return g.freq_spacing() * std::sqrt(r2);
}

Field upsample(const Field& f, const Grid& to) {
  const Field fh = to_frequency(f);
  return to_physical(Field(to, pad_spectrum(f.grid(), fh.samples(), to), Rep::frequency));
}

}  // namespace

TEST_CASE("apply_symbol: identity, projection out, caller representation") {
  const Grid g(2, 8.0, 32);
  const Field f = oracle::random_field(g, 1);
  const Field same = apply_symbol(f, RadialSymbol("one", [](double) { return 1.0; }));
  CHECK(same.rep() == Rep::physical);
  CHECK(oracle::max_abs_diff(same.samples(), f.samples()) <= 1e-12 * oracle::max_abs(f.samples()));

  const Field fh = to_frequency(f);
  CHECK(apply_symbol(fh, RadialSymbol("one", [](double) { return 1.0; })).rep() == Rep::frequency);

  const Field mode = single_mode(g, {5, 3, 0});
  const Field gone = apply_symbol(mode, low_pass_symbol(0.9 * mode_radius(g, {5, 3, 0})));
  CHECK(oracle::max_abs(gone.samples()) <= 1e-15);

  CHECK_THROWS_AS(apply_symbol(f, RadialSymbol("bad", [](double r) { return r > 1 ? NAN : 1.0; })),
                  DomainError);
}

TEST_CASE("apply_symbol matches direct summation for |xi|^{1/2}") {
  for (int d : {2, 3}) {
    const Grid g(d, 5.0, 16);
    const Field f = oracle::random_field(g, 30 + d, d == 3 ? 0.5 : 1.0);
    const auto sym = [](double r) { return std::sqrt(r); };
    const Field out = apply_symbol(f, RadialSymbol("sqrt", sym));
    const auto ref = oracle::apply_multiplier(g, f.samples(), sym);
    CHECK(oracle::max_abs_diff(out.samples(), ref) <= 1e-12 * oracle::max_abs(ref));
  }
}

TEST_CASE("symbol tables are indexed by squared lattice norm") {
  const Grid g(3, 2.0 * std::numbers::pi, 8);
  const auto table = RadialSymbol("r", [](double r) { return r; }).lattice_table(g);
  CHECK(table.size() == std::size_t(g.max_mode_norm2() + 1));
  CHECK(table[9] == doctest::Approx(3.0));
  std::ostringstream os;
  const std::vector<double> radii{0.0, 2.0};
  RadialSymbol("twice", [](double r) { return 2 * r; }).write_csv(os, radii);
  CHECK(os.str() == "r,twice\n0,0\n2,4\n");
}

TEST_CASE("smoothed cutoff profile") {
  CHECK(lp_cutoff(0.0) == 1.0);
  CHECK(lp_cutoff(1.0) == 1.0);
  CHECK(lp_cutoff(2.0) == 0.0);
  CHECK(lp_cutoff(2.5) == 0.0);
  CHECK(lp_cutoff(1.5) == doctest::Approx(0.5).epsilon(1e-12));
  double prev = 1.0;
  for (double r = 1.0; r <= 2.0; r += 1e-3) {
    const double v = lp_cutoff(r);
    CHECK(v <= prev + 1e-15);
    CHECK(v >= 0.0);
    prev = v;
  }
}

TEST_CASE("Littlewood-Paley projections: support, weights, telescoping") {
  const Grid g(2, 2.0 * std::numbers::pi, 64);  // dxi = 1
  const ProjectionBank bank(0, 5);
  const int j = 3;
  // |xi| = 12 = 1.5 * 2^3
  const Field mid = single_mode(g, {12, 0, 0}, 2.0);
  const Field pj = lp_project(mid, bank, j);
  const double w = bank.phi(j, 12.0);
  CHECK(w > 0.0);
  CHECK(w <= 1.0);
  CHECK(oracle::max_abs_diff(pj.samples(), scale(mid, w).samples()) <= 1e-12);
  // |xi| = 32 = 2^{j+2}


  const Field out = lp_project(single_mode(g, {0, 31, 0}), ProjectionBank(0, 5), 2);
  CHECK(oracle::max_abs(out.samples()) <= 1e-15);
  CHECK_THROWS_AS(lp_project(mid, bank, 6), DomainError);
  CHECK_THROWS_AS(lp_project(mid, bank, -1), DomainError);

  for (double r = 0.0; r < 80.0; r += 0.37) {
    double sum = 0.0;
    for (int i = bank.j_min(); i <= bank.j_max(); ++i) sum += bank.phi(i, r);
    CHECK(sum == doctest::Approx(bank.band_symbol()(r)).epsilon(1e-14));
    for (int i = bank.j_min(); i <= bank.j_max(); ++i) {
      const double v = bank.phi(i, r);
      if (r < std::ldexp(1.0, i - 1) || r > std::ldexp(1.0, i + 1)) CHECK(v == 0.0);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("Littlewood-Paley almost orthogonality") {
  const Grid g(2, 10.0, 64);
  const ProjectionBank bank = ProjectionBank::for_grid(g);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Field f = oracle::random_field(Grid(2, 10.0, 32), seed);
    const Field padded = upsample(f, g);
    double pieces = 0.0;
    for (int j = bank.j_min(); j <= bank.j_max(); ++j) pieces += l2sq(lp_project(padded, bank, j));
    const double whole = l2sq(apply_symbol(padded, bank.band_symbol()));
    CHECK(std::abs(pieces - whole) <= 0.5 * whole);
  }
}

TEST_CASE("sharp cutoffs split a field orthogonally") {
  const Grid g(3, 6.0, 16);
  const Field f = oracle::random_field(g, 9, 0.5);
  const double cut = 0.37 * g.nyquist();
  const Field lo = low_pass(f, cut), hi = high_pass(f, cut);
  Field sum = scale(subtract(f, lo), 1.0);
  CHECK(oracle::max_abs_diff(sum.samples(), hi.samples()) <= 1e-13 * oracle::max_abs(f.samples()));
  CHECK(std::abs(inner_re(lo, hi)) <= 1e-12 * l2sq(f));
  CHECK(std::abs(l2sq(f) - l2sq(lo) - l2sq(hi)) <= 1e-12 * l2sq(f));

  const Field band = oracle::random_field(Grid(2, 6.0, 32), 10, 0.25);
  const double top = std::sqrt(2.0) * max_excited_wavenumber(band, 1e-13) * band.grid().freq_spacing();
  const Field all = low_pass(band, 1.01 * top);
  CHECK(oracle::max_abs_diff(all.samples(), band.samples()) <= 1e-13 * oracle::max_abs(band.samples()));

  const Field no_mean = high_pass(band, 1e-9);
  cplx mean = 0.0;
  for (const auto& z : band.samples()) mean += z;
  mean /= double(band.size());
  std::vector<cplx> expect(band.size());
  for (std::size_t i = 0; i < band.size(); ++i) expect[i] = band[i] - mean;
  CHECK(oracle::max_abs_diff(no_mean.samples(), expect) <= 1e-13 * oracle::max_abs(band.samples()));

  CHECK_THROWS_AS(low_pass(f, g.nyquist()), ResolutionError);
  CHECK_THROWS_AS(high_pass(f, 0.0), DomainError);
}

TEST_CASE("I-operator symbol") {
  for (double s : {0.1, 0.5, 0.7, 0.95}) {
    const double N = 3.0;
    const auto m = i_operator_symbol(N, s);
    CHECK(m(N / 2) == 1.0);
    CHECK(m(N) == 1.0);
    CHECK(m(4 * N) == doctest::Approx(std::pow(4.0, -(1 - s))).epsilon(1e-15));
    CHECK(m(2 * N) == doctest::Approx(std::pow(2.0, -(1 - s))).epsilon(1e-15));
    CHECK(m(7 * N) == std::pow(N / (7 * N), 1 - s));
    double prev = 1.0;
    for (double r = 0.0; r < 10 * N; r += 0.01) {
      const double v = m(r);
      CHECK(v > 0.0);
      CHECK(v <= prev);
      prev = v;
    }
    // log-log slope continuity at both ends of the transition
    const auto slope = [&](double r) {
      const double h = 1e-6;
      return (std::log(m(r * (1 + h))) - std::log(m(r * (1 - h)))) / (std::log1p(h) - std::log1p(-h));
    };
    CHECK(slope(N) == doctest::Approx(0.0).epsilon(1e-5));
    CHECK(slope(2 * N) == doctest::Approx(-(1 - s)).epsilon(1e-5));
  }
  CHECK(i_operator_symbol(1.0, 0.5)(4.0) == doctest::Approx(0.5));
  // s near one: almost the identity
  const Grid g(2, 10.0, 32);
  const Field f = oracle::random_field(g, 4);
  const Field id = apply_symbol(f, i_operator_symbol(0.1, 1.0 - 1e-15));
  CHECK(oracle::max_abs_diff(id.samples(), f.samples()) <= 1e-12 * oracle::max_abs(f.samples()));
  CHECK_THROWS_AS(i_operator_symbol(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(i_operator_symbol(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(i_operator_symbol(-1.0, 0.5), DomainError);
  CHECK_THROWS_AS(apply_symbol(f, i_operator_symbol(0.5 * g.nyquist(), 0.5)), ResolutionError);
}

TEST_CASE("fractional derivatives") {
  const Grid g(2, 7.0, 32);
  const Field f = oracle::random_field(g, 12);
  const Field zero_order = fractional_derivative(f, 0.0);
  CHECK(oracle::max_abs_diff(zero_order.samples(), f.samples()) <= 1e-12 * oracle::max_abs(f.samples()));

  const std::array<int, 3> m{3, -4, 0};
  const Field mode = single_mode(g, m, cplx(0.5, 1.0));
  const Field scaled = fractional_derivative(mode, 0.75);
  const double gain = std::pow(mode_radius(g, m), 0.75);
  CHECK(oracle::max_abs_diff(scaled.samples(), scale(mode, gain).samples()) <= 1e-12 * gain);
  const Field bracket = fractional_derivative(mode, 0.75, Weight::inhomogeneous);
  const double bgain = std::pow(1 + std::pow(mode_radius(g, m), 2), 0.375);
  CHECK(oracle::max_abs_diff(bracket.samples(), scale(mode, bgain).samples()) <= 1e-12 * bgain);

  const Field twice = fractional_derivative(fractional_derivative(f, 0.5), 0.5);
  const Field once = fractional_derivative(f, 1.0);
  CHECK(oracle::max_abs_diff(twice.samples(), once.samples()) <= 1e-12 * oracle::max_abs(once.samples()));

  const Field neg = fractional_derivative(to_frequency(f), -0.5);
  CHECK(neg[0] == cplx(0.0, 0.0));
}

TEST_CASE("disjoint symbols give orthogonal outputs") {
  const Grid g(2, 9.0, 32);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Field f = oracle::random_field(g, 100 + seed);
    const double c = (0.2 + 0.05 * seed) * g.nyquist();
    const Field a = apply_symbol(f, RadialSymbol("in", [c](double r) { return r <= c ? std::cos(r) : 0.0; }));
    const Field b = apply_symbol(f, RadialSymbol("out", [c](double r) { return r > c ? 1.0 / (1 + r) : 0.0; }));
    CHECK(std::abs(inner_re(a, b)) <= 1e-12 * l2sq(f));
  }
}

TEST_CASE("Bernstein bound with the annulus constant") {
  const Grid g(2, 12.0, 64);
  const ProjectionBank bank = ProjectionBank::for_grid(g);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Field f = oracle::random_field(Grid(2, 12.0, 32), 200 + seed);
    const Field u = upsample(f, g);
    for (double s : {0.5, 1.0, -0.5}) {
      const double hs = sobolev_norm(u, s);
      for (int j = bank.j_min(); j <= bank.j_max(); ++j) {
        const double lhs = lebesgue_norm(lp_project(u, bank, j), 2.0);
        const double rhs = std::pow(2.0, std::abs(s)) * std::pow(2.0, -j * s) * hs;
        CHECK(lhs <= rhs * (1 + 1e-9));
      }
    }
  }
}
