#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "nlsim/config.hpp"
#include "nlsim/corpus.hpp"
#include "nlsim/error.hpp"
#include "nlsim/fit.hpp"
#include "nlsim/norms.hpp"
#include "nlsim/report.hpp"
#include "nlsim/spectral.hpp"
#include "nlsim/studies.hpp"

using namespace nlsim;
namespace fs = std::filesystem;

namespace {

ExperimentConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

const char* kConserve = R"(# comment line
study = conserve
seed = 7
[grid]
dim = 2
n = 64
extent = 12
[evolution]
k = 1
dt = 0.01
t_final = 0.2
sample_every = 5
[datum]
profile = gaussian
amplitude = 1
width = 1.2
)";

std::string with(std::string base, const std::string& extra) { return base + extra; }

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("nlsim_test_" + name);
  fs::remove_all(p);
  return p;
}

// Config error message must carry the offending line.
void check_line_error(const std::string& text, const std::string& needle) {
  try {
    (void)parse(text);
    FAIL("expected ConfigError containing '" << needle << "'");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
}

bool has_flag(const StudyReport& r, const std::string& prefix) {
  for (const auto& f : r.flags)
    if (f.rfind(prefix + ":", 0) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("config parses sections, defaults and study names") {
  const ExperimentConfig c = parse(kConserve);
  CHECK(c.study == Study::conserve);
  CHECK(c.seed == 7);
  CHECK(c.grid.n == 64);
  CHECK(c.evolution.dim == 2);
  CHECK(c.evolution.dt == 0.01);
  CHECK(c.datum.width == 1.2);
  CHECK(c.datum_band_limit == 0.0);
  CHECK(parse_study("sweep-n") == Study::sweep_n);
  CHECK(parse_study("sweep_n") == Study::sweep_n);
  CHECK_THROWS_AS(parse_study("sweep"), ConfigError);

  std::string no_dt = kConserve;
  no_dt.erase(no_dt.find("dt = 0.01\n"), 10);
  CHECK(parse(no_dt).evolution.dt > 0.0);
}

TEST_CASE("config rejects unknown, duplicate and empty entries") {
  check_line_error(with(kConserve, "bogus = 1\n"), "line 17");
  check_line_error(with(kConserve, "[nowhere]\n"), "unknown section");
  check_line_error(with(kConserve, "width = 2\n"), "duplicate");
  check_line_error(with(kConserve, "seed =\n"), "empty value");
  check_line_error(with(kConserve, "amplitude two\n"), "key = value");
  check_line_error(with(kConserve, "[evolution]\nnonlinearity = focusing\n"), "defocusing");
  check_line_error(with(kConserve, "band_limit = -1\n"), "band_limit");
}

TEST_CASE("config cross-field validation") {
  // Unresolved datum: 1.2 is below four cells of a 32-point, L=12 grid.
  std::string coarse = kConserve;
  coarse.replace(coarse.find("n = 64"), 6, "n = 32");
  CHECK_THROWS_AS(parse(coarse), ConfigError);

  const std::string sweep = R"(study = sweep_n
[grid]
dim = 2
n = 64
extent = 12
[evolution]
k = 1
dt = 0.01
t_final = 0.1
[datum]
profile = gaussian
amplitude = 1
width = 1.2
[imethod]
s = 0.75
)";
  CHECK_NOTHROW(parse(sweep + "N = 1, 2, 4, 8\n"));
  CHECK_THROWS_AS(parse(sweep + "N = 1, 2, 4\n"), ConfigError);
  CHECK_THROWS_AS(parse(sweep + "N = 1, 4, 2, 8\n"), ConfigError);
  CHECK_THROWS_AS(parse(sweep + "N = 1, 2, 2, 8\n"), ConfigError);
  // Nyquist is pi*64/12 ~ 16.8, so N = 9 puts 2N above it.
  CHECK_THROWS_AS(parse(sweep + "N = 1, 2, 4, 9\n"), ConfigError);

  const std::string ineq = "study = inequalities\n[grid]\ndim = 2\nn = 64\nextent = 16\n";
  CHECK_NOTHROW(parse(ineq));
  CHECK_THROWS_AS(parse(ineq + "[inequalities]\ncorpus_size = 99\n"), ConfigError);
  CHECK_THROWS_AS(parse("study = inequalities\n[grid]\ndim = 3\nn = 16\nextent = 8\n"), ConfigError);

  std::string mor = with(kConserve, "[morawetz]\n");
  mor.replace(mor.find("conserve"), 8, "morawetz");
  for (int i = 0; i < 4; ++i) mor += "family = gaussian 1 1.2\n";
  CHECK_THROWS_AS(parse(mor), ConfigError);
  CHECK_NOTHROW(parse(mor + "family = gaussian 0 1.2\n"));
  CHECK_THROWS_AS(parse(mor + "family = gaussian one\n"), ConfigError);
}

TEST_CASE("least-squares fits and median") {
  const std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
  const LineFit f = fit_line(x, y);
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(f.r_squared == doctest::Approx(1.0));
  CHECK(f.rms_residual == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f.samples == 4);

  const std::vector<double> n{4, 8, 16, 32}, tv{1.0 / 4, 1.0 / 8, 1.0 / 16, 1.0 / 32};
  CHECK(fit_loglog(n, tv).slope == doctest::Approx(-1.0));

  const std::vector<double> noisy{3, 6, 6, 9};
  CHECK(fit_line(x, noisy).r_squared < 1.0);
  CHECK_THROWS_AS(fit_line(std::vector<double>{1}, std::vector<double>{1}), DomainError);
  CHECK_THROWS_AS(fit_line(std::vector<double>{2, 2}, std::vector<double>{1, 3}), DomainError);
  CHECK_THROWS_AS(fit_loglog(n, std::vector<double>{1, 0, 1, 1}), DomainError);

  CHECK(median(std::vector<double>{3, 1, 2}) == 2.0);
  CHECK(median(std::vector<double>{4, 1, 3, 2}) == 2.5);
}

TEST_CASE("report JSON and atomic writes") {
  StudyReport r;
  r.study = "conserve";
  r.columns = {"a", "b"};
  r.cases.push_back({"case", {1.5, std::numeric_limits<double>::quiet_NaN()}, "ok"});
  r.fits.push_back({"slope", -1.0, 0.01, 4});
  r.assert_that("holds", true, "fine");
  CHECK(r.passed());
  r.assert_that("breaks", false, "bad");
  CHECK_FALSE(r.passed());
  CHECK(r.fit("slope")->samples == 4);
  CHECK(r.assertion("breaks")->detail == "bad");
  CHECK(r.fit("missing") == nullptr);

  std::ostringstream os;
  write_json(os, r);
  const std::string j = os.str();
  CHECK(j.find("\"passed\": false") != std::string::npos);
  CHECK(j.find("null") != std::string::npos);
  CHECK(j.find("\"residual\": 0.01") != std::string::npos);

  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");

  const fs::path dir = scratch("atomic");
  write_atomically(dir / "x.csv", [](std::ostream& o) { o << "a,b\n"; });
  CHECK(fs::exists(dir / "x.csv"));
  CHECK_FALSE(fs::exists(dir / "x.csv.tmp"));
  CHECK(fs::file_size(dir / "x.csv") == 4);
}

TEST_CASE("random corpus fields") {
  const Grid g(2, 16.0, 32);
  const Field a = random_band_field(g, 5, 0);
  CHECK(lebesgue_norm(a, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
  const Field spec = to_frequency(a);
  const double nyq = g.nyquist();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.freq_norm(i) > 0.5 * nyq + 1e-9) CHECK(std::abs(spec[i]) <= 1e-14);
  }
  CHECK(std::abs(spec[0]) > 0.0);
  CHECK(random_band_field(g, 5, 0).samples()[7] == a.samples()[7]);
  CHECK(random_band_field(g, 5, 1).samples()[7] != a.samples()[7]);

  const Field rad = random_radial_field(Grid(3, 20.0, 80), 3, 2);
  CHECK(lebesgue_norm(rad, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sweep flags degenerate and expected-degenerate data") {
  ExperimentConfig cfg = parse(R"(study = sweep_n
[grid]
dim = 2
n = 64
extent = 12
[evolution]
k = 1
dt = 0.01
t_final = 0.2
[imethod]
N = 1, 2, 4, 8
s = 0.75
[datum]
profile = gaussian
amplitude = 1e-6
width = 1.2
)");
  cfg.output_dir = scratch("sweep_linear");
  const StudyReport lin = run_sweep_n(cfg);
  CHECK(lin.passed());
  CHECK(lin.assertions.empty());
  CHECK(has_flag(lin, "degenerate"));
  CHECK(fs::exists(cfg.output_dir / "ledger_N4.csv"));
  std::ifstream summary(cfg.output_dir / "sweep_summary.csv");
  std::string header;
  std::getline(summary, header);
  CHECK(header == "N,total_variation,fitted_slope_so_far");

  // 2-pi box: unit lattice spacing, Nyquist 32; datum kept below N_min/8.
  cfg.grid = {2, 64, 2.0 * std::numbers::pi};
  cfg.datum = {ProfileKind::gaussian, 1.0, 0.5, 0};
  cfg.datum_band_limit = 1.5;
  cfg.cutoffs = {12, 13, 14, 15};
  cfg.evolution.dt = 0.005;
  cfg.evolution.t_final = 0.1;
  cfg.output_dir = scratch("sweep_band");
  cfg.validate();
  const StudyReport band = run_sweep_n(cfg);
  CHECK(has_flag(band, "expected-degenerate"));
  CHECK(band.assertions.empty());
  const double drift = std::stod(band.environment.at("plain_energy_variation"));
  for (const auto& c : band.cases) CHECK(c.values[1] == doctest::Approx(drift).epsilon(1e-3));
  CHECK(std::abs(band.fit("slope")->value) < 0.05);
}

TEST_CASE("conserve on the zero datum and scatter in the linear regime") {
  ExperimentConfig cfg = parse(kConserve);
  cfg.datum.amplitude = 0.0;
  cfg.output_dir = scratch("conserve_zero");
  const StudyReport zero = run_conserve(cfg);
  for (const auto& c : zero.cases) {
    CHECK(c.values[2] == 0.0);
    CHECK(c.values[3] == 0.0);
  }
  CHECK(zero.passed());
  CHECK(has_flag(zero, "vacuous"));

  cfg.study = Study::scatter;
  cfg.datum.amplitude = 1e-6;
  cfg.extents = {12.0};
  cfg.output_dir = scratch("scatter_linear");
  const StudyReport lin = run_scatter(cfg);
  CHECK(lin.assertions.empty());
  std::ifstream in(cfg.output_dir / "scatter_L12.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,pullback_cauchy_H1");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::stod(line.substr(line.find(',') + 1)) <= 1e-12);
  }
  CHECK(rows == 4);
}
