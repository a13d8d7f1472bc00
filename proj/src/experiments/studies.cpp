#include "nlsim/studies.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "nlsim/corpus.hpp"
#include "nlsim/dynamics.hpp"
#include "nlsim/error.hpp"
#include "nlsim/fit.hpp"
#include "nlsim/imethod.hpp"
#include "nlsim/norms.hpp"
#include "nlsim/series.hpp"
#include "nlsim/spectral.hpp"
#include "nlsim/symbol.hpp"

#ifndef NLSIM_VERSION
#define NLSIM_VERSION "unknown"
#endif

namespace nlsim {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string describe(const RadialProfile& p) {
  std::ostringstream os;
  os << to_string(p.kind) << " amplitude=" << format_number(p.amplitude)
     << " width=" << format_number(p.width) << " seed=" << p.seed;
  return os.str();
}

StudyReport start_report(const ExperimentConfig& cfg) {
  StudyReport r;
  r.study = to_string(cfg.study);
  auto& env = r.environment;
  env["version"] = NLSIM_VERSION;
  env["seed"] = std::to_string(cfg.seed);
  env["grid"] = std::to_string(cfg.grid.dim) + "d n=" + std::to_string(cfg.grid.n) +
                " L=" + format_number(cfg.grid.extent);
  env["dt"] = format_number(cfg.evolution.dt);
  env["t_final"] = format_number(cfg.evolution.t_final);
  env["sample_every"] = std::to_string(cfg.evolution.sample_every);
  env["k"] = std::to_string(cfg.evolution.k);
  env["dealias"] = cfg.evolution.dealias ? "true" : "false";
  env["datum"] = describe(cfg.datum);
  if (cfg.datum_band_limit > 0.0) env["datum_band_limit"] = format_number(cfg.datum_band_limit);
  return r;
}

void write_summary(const ExperimentConfig& cfg, const StudyReport& r) {
  write_atomically(cfg.output_dir / "summary.json", [&](std::ostream& os) { write_json(os, r); });
}

void write_series(const std::filesystem::path& path, const DiagnosticSeries& s) {
  write_atomically(path, [&](std::ostream& os) { write_csv(os, s); });
}

void write_table(const std::filesystem::path& path, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows) {
  write_atomically(path, [&](std::ostream& os) {
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
      os << '\n';
    }
  });
}

IMethodConfig imethod_config(const ExperimentConfig& cfg, double N) {
  return IMethodConfig{N, cfg.s, cfg.evolution.k, cfg.grid.dim};
}

// Field sampled on the free flow at evenly spaced times over [0, T].
Trajectory free_trajectory(const Field& u0, double T, int samples) {
  Trajectory tr;
  tr.params.dim = u0.grid().dim();
  tr.params.dt = T / (samples - 1);
  tr.params.t_final = T;
  const Field spec = to_frequency(u0);
  for (int i = 0; i < samples; ++i) {
    const double t = T * i / (samples - 1);
    tr.samples.push_back({t, to_physical(linear_flow(spec, t))});
  }
  return tr;
}

// Enough samples for four per period of the fastest phase difference.
int time_samples(double T, double max_frequency) {
  const double periods = T * max_frequency * max_frequency / (2.0 * std::numbers::pi);
  return std::max(33, static_cast<int>(std::ceil(4.0 * periods)) + 1);
}

struct Spread {
  double max = 0.0, median = 0.0, min = 0.0;
  std::size_t count = 0;
};

Spread spread(const std::vector<double>& v) {
  Spread s;
  s.count = v.size();
  if (v.empty()) return s;
  s.max = *std::max_element(v.begin(), v.end());
  s.min = *std::min_element(v.begin(), v.end());
  s.median = median(v);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

StudyReport run_sweep_n(const ExperimentConfig& cfg) {
  cfg.validate();
  StudyReport r = start_report(cfg);
  r.environment["s"] = format_number(cfg.s);
  const Grid grid = cfg.grid.make();
  const Field u0 = cfg.initial_datum(grid);
  const std::size_t cases = cfg.cutoffs.size();
  std::vector<IMethodConfig> ics;
  for (double N : cfg.cutoffs) ics.push_back(imethod_config(cfg, N));

  std::vector<double> times, plain;
  std::vector<std::vector<double>> modified(cases);
  const auto warnings = evolve_streaming(u0, cfg.evolution, [&](std::size_t, double t, const Field& u) {
    const Field spec = to_frequency(u);
    times.push_back(t);
    plain.push_back(energy(spec, cfg.evolution.k));
    for (std::size_t i = 0; i < cases; ++i) modified[i].push_back(modified_energy(spec, ics[i]));
  });
  for (const auto& w : warnings) r.flags.push_back(w);

  const IncrementLedger drift = increment_ledger(times, plain);
  r.environment["plain_energy_variation"] = format_number(drift.total_variation);

  r.columns = {"N", "total_variation", "E_Iu_initial", "sampling_relative_change", "fitted_slope_so_far"};
  std::vector<double> tv;
  std::vector<std::vector<double>> summary;
  double scale = 0.0;
  for (std::size_t i = 0; i < cases; ++i) {
    const double N = cfg.cutoffs[i];
    const IncrementLedger led = increment_ledger(times, modified[i]);
    write_series(cfg.output_dir / ("ledger_N" + short_number(N) + ".csv"), led.series());
    const SamplingCheck sc = check_sampling(led);
    if (!sc.adequate)
      r.flags.push_back("undersampled: N=" + short_number(N) + " total variation changes by " +
                        format_number(sc.relative_change) + " when every other sample is dropped");
    tv.push_back(led.total_variation);
    scale = std::max(scale, std::abs(led.modified_energy.front()));
    double slope_so_far = kNaN;
    if (tv.size() >= 2 && std::all_of(tv.begin(), tv.end(), [](double v) { return v > 0.0; }))
      slope_so_far = fit_loglog(std::span(cfg.cutoffs).first(tv.size()), tv).slope;
    const std::vector<double> row{N, led.total_variation, led.modified_energy.front(), sc.relative_change,
                                  slope_so_far};
    summary.push_back({N, led.total_variation, slope_so_far});
    r.cases.push_back({"N=" + short_number(N), row, "ok"});
  }
  write_table(cfg.output_dir / "sweep_summary.csv", {"N", "total_variation", "fitted_slope_so_far"}, summary);

  const double nmin = cfg.cutoffs.front();
  const Field above = high_pass(u0, nmin * 0.125);
  const bool band_limited = lebesgue_norm(above, 2.0) <= 1e-12 * lebesgue_norm(u0, 2.0);
  const bool degenerate = *std::max_element(tv.begin(), tv.end()) <= 1e-10 * std::max(scale, 1e-300);
  const bool positive = std::all_of(tv.begin(), tv.end(), [](double v) { return v > 0.0; });
  if (positive) {
    const LineFit f = fit_loglog(cfg.cutoffs, tv);
    r.fits.push_back({"slope", f.slope, f.rms_residual, f.samples});
    r.fits.push_back({"r_squared", f.r_squared, f.rms_residual, f.samples});
  }
  if (band_limited) {
    r.flags.push_back("expected-degenerate: datum band-limited below N_min/8, variation is the scheme's energy drift");
  } else if (degenerate) {
    r.flags.push_back("degenerate: total variation at roundoff level for every N");
  } else if (!positive) {
    r.assert_that("slope", false, "a total variation is exactly zero; slope undefined");
  } else {
    const auto* slope = r.fit("slope");
    const auto* r2 = r.fit("r_squared");
    r.assert_that("slope", slope->value <= -0.8, "fitted slope " + format_number(slope->value) + " (need <= -0.8)");
    r.assert_that("r_squared", r2->value >= 0.9, "fit R^2 " + format_number(r2->value) + " (need >= 0.9)");
  }
  write_summary(cfg, r);
  return r;
}

// ---------------------------------------------------------------------------

StudyReport run_conserve(const ExperimentConfig& cfg) {
  cfg.validate();
  StudyReport r = start_report(cfg);
  const Grid grid = cfg.grid.make();
  const Field u0 = cfg.initial_datum(grid);
  const int k = cfg.evolution.k;

  struct Drift {
    double dt, steps, mass, energy;
  };
  std::vector<Drift> drifts;
  r.columns = {"dt", "steps", "mass_drift_relative", "energy_drift_absolute"};
  for (int level = 0; level < 2; ++level) {
    EvolutionParams p = cfg.evolution;
    p.dt = cfg.evolution.dt / (1 << level);
    p.sample_every = cfg.evolution.sample_every << level;
    std::vector<std::vector<double>> rows;
    double m0 = 0.0, e0 = 0.0, dm = 0.0, de = 0.0;
    const auto warnings = evolve_streaming(u0, p, [&](std::size_t i, double t, const Field& u) {
      const double m = mass(u), e = energy(u, k);
      if (i == 0) {
        m0 = m;
        e0 = e;
      }
      dm = std::max(dm, m0 > 0.0 ? std::abs(m - m0) / m0 : std::abs(m - m0));
      de = std::max(de, std::abs(e - e0));
      rows.push_back({t, m, e});
    });
    for (const auto& w : warnings) r.flags.push_back(w);
    write_table(cfg.output_dir / ("conserve_level" + std::to_string(level) + ".csv"), {"t", "mass", "energy"}, rows);
    drifts.push_back({p.dt, static_cast<double>(p.total_steps()), dm, de});
    r.cases.push_back({"dt=" + format_number(p.dt), {p.dt, static_cast<double>(p.total_steps()), dm, de}, "ok"});
  }
  std::vector<std::vector<double>> table;
  for (const auto& d : drifts) table.push_back({d.dt, d.steps, d.mass, d.energy});
  write_table(cfg.output_dir / "conserve_summary.csv", {"dt", "steps", "mass_drift", "energy_drift"}, table);

  for (const auto& d : drifts)
    r.assert_that("mass_drift dt=" + format_number(d.dt), d.mass <= 1e-10,
                  "relative mass drift " + format_number(d.mass) + " over " + format_number(d.steps) + " steps");
  const double e_scale = std::max(1.0, std::abs(energy(u0, k)));
  if (drifts[0].energy <= 1e-14 * e_scale) {
    r.flags.push_back("vacuous: energy drift at roundoff level, ratio undefined");
    r.fits.push_back({"energy_drift_ratio", kNaN, 0.0, 2});
  } else {
    const double ratio = drifts[1].energy > 0.0 ? drifts[0].energy / drifts[1].energy : kNaN;
    r.fits.push_back({"energy_drift_ratio", ratio, 0.0, 2});
    r.assert_that("energy_drift_ratio", ratio >= 3.2 && ratio <= 4.8,
                  "drift(dt)/drift(dt/2) = " + format_number(ratio) + " (need [3.2, 4.8])");
  }
  write_summary(cfg, r);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct InequalityRecord {
  std::string name;
  std::vector<double> constants;
};

double safe_ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

}  // namespace

StudyReport run_inequalities(const ExperimentConfig& cfg) {
  cfg.validate();
  StudyReport r = start_report(cfg);
  r.environment["corpus_size"] = std::to_string(cfg.corpus_size);
  r.environment["grid3"] = "3d n=" + std::to_string(cfg.grid3.n) + " L=" + format_number(cfg.grid3.extent);
  r.environment["radial_grid"] =
      "3d n=" + std::to_string(cfg.radial_grid.n) + " L=" + format_number(cfg.radial_grid.extent);
  r.environment["strichartz_time"] = format_number(cfg.strichartz_time);

  const Grid g2 = cfg.grid.make();
  const ProjectionBank bank = ProjectionBank::for_grid(g2);
  const double nyq = g2.nyquist();
  const double band_lo = 0.2, band_hi = 0.5;
  const std::vector<double> split_cutoffs{nyq / 8, nyq / 4, nyq / 2};
  const double T = cfg.strichartz_time;

  InequalityRecord b77_half{"bernstein_l2_s0.5", {}}, b77_one{"bernstein_l2_s1", {}};
  InequalityRecord b78_4{"bernstein_lp_p4", {}}, b78_inf{"bernstein_lp_pinf", {}};
  InequalityRecord s218{"interpolation_low", {}}, s219{"interpolation_high", {}};
  InequalityRecord str44{"strichartz_4_4_d2", {}};

  // Local smoothing: R = L/8, window [0, L / 2^{j+2}] before the packet
  // wraps around the periodic box.
  const double R = g2.extent() / 8.0;
  std::vector<int> smoothing_js;
  for (int j = bank.j_min(); j <= bank.j_max(); ++j)
    if (std::ldexp(1.0, j - 1) >= g2.freq_spacing() && std::ldexp(1.0, j - 1) < band_lo * nyq)
      smoothing_js.push_back(j);
  std::vector<double> smoothing_constant(smoothing_js.size(), 0.0);
  std::vector<std::size_t> smoothing_count(smoothing_js.size(), 0);

  std::vector<std::vector<double>> per_field;
  for (int i = 0; i < cfg.corpus_size; ++i) {
    const Field f = random_band_field(g2, cfg.seed, static_cast<std::uint64_t>(i), band_lo, band_hi);
    const Field fh = to_frequency(f);
    const double h_half = sobolev_norm(fh, 0.5), h_one = sobolev_norm(fh, 1.0);
    const double l2 = lebesgue_norm(f, 2.0);
    double c77h = 0.0, c77o = 0.0, c78_4 = 0.0, c78_inf = 0.0;
    for (int j = bank.j_min(); j <= bank.j_max(); ++j) {
      const Field pj = to_physical(lp_project(fh, bank, j));
      const double pl2 = lebesgue_norm(pj, 2.0);
      c77h = std::max(c77h, safe_ratio(pl2, std::pow(2.0, -0.5 * j) * h_half));
      c77o = std::max(c77o, safe_ratio(pl2, std::pow(2.0, -1.0 * j) * h_one));
      if (pl2 <= 1e-10 * l2) continue;
      const double d = g2.dim();
      c78_4 = std::max(c78_4, lebesgue_norm(pj, 4.0) / (std::pow(2.0, j * d * 0.25) * pl2));
      c78_inf = std::max(c78_inf, lebesgue_norm(pj, kInfinity) / (std::pow(2.0, j * d * 0.5) * pl2));

      if (i < cfg.smoothing_corpus_size) {
        const auto it = std::find(smoothing_js.begin(), smoothing_js.end(), j);
        if (it != smoothing_js.end()) {
          const std::size_t slot = static_cast<std::size_t>(it - smoothing_js.begin());
          const double Tj = g2.extent() / std::ldexp(1.0, j + 2);
          const int samples = time_samples(Tj, std::ldexp(1.0, j + 1));
          const Field pjh = to_frequency(pj);
          double integral = 0.0, prev = 0.0;
          for (int m = 0; m < samples; ++m) {
            const double t = Tj * m / (samples - 1);
            const Field u = to_physical(linear_flow(pjh, t));
            double inside = 0.0;
            for (std::size_t p = 0; p < u.size(); ++p)
              if (g2.radius(p) <= R) inside += std::norm(u[p]);
            inside *= g2.cell_volume();
            if (m > 0) integral += 0.5 * (Tj / (samples - 1)) * (prev + inside);
            prev = inside;
          }
          const double ratio = std::sqrt(integral) / (std::pow(2.0, -0.5 * j) * std::sqrt(R) * pl2);
          smoothing_constant[slot] = std::max(smoothing_constant[slot], ratio);
          ++smoothing_count[slot];
        }
      }
    }
    double c218 = 0.0, c219 = 0.0;
    for (double N : split_cutoffs) {
      const Field lo = low_pass(fh, N), hi = high_pass(fh, N);
      c218 = std::max(c218, safe_ratio(sobolev_norm(lo, 0.5), std::sqrt(h_one * lebesgue_norm(lo, 2.0))));
      c219 = std::max(c219, safe_ratio(sobolev_norm(hi, 0.5), h_one / std::sqrt(N)));
    }
    const double c44 = mixed_norm(free_trajectory(f, T, time_samples(T, band_hi * nyq)), {4.0, 4.0, 0.0, T}) / l2;
    b77_half.constants.push_back(c77h);
    b77_one.constants.push_back(c77o);
    b78_4.constants.push_back(c78_4);
    b78_inf.constants.push_back(c78_inf);
    s218.constants.push_back(c218);
    s219.constants.push_back(c219);
    str44.constants.push_back(c44);
    per_field.push_back({double(i), c77h, c77o, c78_4, c78_inf, c218, c219, c44});
  }

  // Three-dimensional Strichartz pairs on general random fields.
  const Grid g3 = cfg.grid3.make();
  InequalityRecord str_sym{"strichartz_10/3_10/3_d3", {}}, str_end{"strichartz_2_6_d3", {}};
  const int samples3 = time_samples(T, band_hi * g3.nyquist());
  for (int i = 0; i < cfg.corpus_size; ++i) {
    const Field f = random_band_field(g3, cfg.seed, 1000000u + static_cast<std::uint64_t>(i), band_lo, band_hi);
    const Trajectory tr = free_trajectory(f, T, samples3);
    const double l2 = lebesgue_norm(f, 2.0);
    str_sym.constants.push_back(mixed_norm(tr, {10.0 / 3.0, 10.0 / 3.0, 0.0, T}) / l2);
    str_end.constants.push_back(mixed_norm(tr, {2.0, 6.0, 0.0, T}) / l2);
    per_field[static_cast<std::size_t>(i)].push_back(str_sym.constants.back());
    per_field[static_cast<std::size_t>(i)].push_back(str_end.constants.back());
  }

  // Radial Sobolev embedding on radial 3-d data.
  const Grid gr = cfg.radial_grid.make();
  const ProjectionBank rbank = ProjectionBank::for_grid(gr);
  InequalityRecord radial{"radial_sobolev", {}};
  for (int i = 0; i < cfg.corpus_size; ++i) {
    const Field f = random_radial_field(gr, cfg.seed, static_cast<std::uint64_t>(i));
    const Field fh = to_frequency(f);
    const double l2 = lebesgue_norm(fh, 2.0);
    double c = 0.0;
    for (int j = rbank.j_min(); j <= rbank.j_max(); ++j) {
      const Field pj = lp_project(fh, rbank, j);
      if (lebesgue_norm(pj, 2.0) <= 1e-10 * l2) continue;
      c = std::max(c, weighted_radial_sup(pj, 1.0) / sobolev_norm(pj, 0.5));
    }
    radial.constants.push_back(c);
    per_field[static_cast<std::size_t>(i)].push_back(c);
  }

  write_table(cfg.output_dir / "corpus_constants.csv",
              {"field", b77_half.name, b77_one.name, b78_4.name, b78_inf.name, s218.name, s219.name, str44.name,
               str_sym.name, str_end.name, radial.name},
              per_field);

  r.columns = {"max", "median", "min", "max_over_median", "samples"};
  std::vector<std::vector<double>> summary;
  auto record = [&](const InequalityRecord& rec, double ceiling) {
    const Spread s = spread(rec.constants);
    const double rel = s.median > 0.0 ? s.max / s.median : kNaN;
    r.cases.push_back({rec.name, {s.max, s.median, s.min, rel, double(s.count)}, "ok"});
    summary.push_back({s.max, s.median, s.min, rel, double(s.count)});
    r.fits.push_back({rec.name, s.max, rel, s.count});
    r.assert_that(rec.name + " stable", s.median > 0.0 && s.max <= 2.0 * s.median,
                  "max/median " + format_number(rel) + " (need <= 2)");
    if (std::isfinite(ceiling))
      r.assert_that(rec.name + " bound", s.max <= ceiling,
                    "max " + format_number(s.max) + " (need <= " + format_number(ceiling) + ")");
  };
  const double none = std::numeric_limits<double>::infinity();
  record(b77_half, std::pow(2.0, 0.5) * (1 + 1e-9));
  record(b77_one, 2.0 * (1 + 1e-9));
  record(b78_4, none);
  record(b78_inf, none);
  record(s218, 1.0 + 1e-12);
  record(s219, 1.0 + 1e-12);
  record(str44, none);
  record(str_sym, none);
  record(str_end, none);
  record(radial, none);

  std::vector<double> present;
  std::vector<std::vector<double>> smoothing_rows;
  for (std::size_t s = 0; s < smoothing_js.size(); ++s) {
    smoothing_rows.push_back({double(smoothing_js[s]), smoothing_constant[s], double(smoothing_count[s])});
    if (smoothing_count[s] > 0) present.push_back(smoothing_constant[s]);
  }
  write_table(cfg.output_dir / "local_smoothing.csv", {"j", "constant", "fields"}, smoothing_rows);
  const Spread ls = spread(present);
  const double ls_rel = ls.median > 0.0 ? ls.max / ls.median : kNaN;
  r.cases.push_back({"local_smoothing", {ls.max, ls.median, ls.min, ls_rel, double(ls.count)}, "ok"});
  r.fits.push_back({"local_smoothing", ls.max, ls_rel, ls.count});
  r.assert_that("local_smoothing stable across j",
                ls.count >= 2 && ls.max <= 1.5 * ls.median && ls.min >= 0.5 * ls.median,
                "constants in [" + format_number(ls.min) + ", " + format_number(ls.max) + "], median " +
                    format_number(ls.median) + " over " + std::to_string(ls.count) + " dyadic scales (need +-50%)");
  summary.push_back({ls.max, ls.median, ls.min, ls_rel, double(ls.count)});

  std::vector<std::string> names;
  for (const auto& c : r.cases) names.push_back(c.label);
  write_atomically(cfg.output_dir / "inequalities.csv", [&](std::ostream& os) {
    os << "inequality,max,median,min,max_over_median,samples\n";
    for (std::size_t i = 0; i < summary.size(); ++i) {
      os << names[i];
      for (double v : summary[i]) os << ',' << format_number(v);
      os << '\n';
    }
  });
  write_summary(cfg, r);
  return r;
}

// ---------------------------------------------------------------------------

StudyReport run_morawetz(const ExperimentConfig& cfg) {
  cfg.validate();
  StudyReport r = start_report(cfg);
  const Grid grid = cfg.grid.make();
  const int d = grid.dim();
  r.columns = {"lhs_nonlinear", "rhs_nonlinear", "ratio_nonlinear", "ratio_linear", "nonlinear_over_linear"};

  auto ratio_of = [&](const Trajectory& tr, double& lhs, double& rhs) {
    const double q = morawetz_quantity(tr, d);
    double sup_mass = 0.0, sup_half = 0.0;
    for (const auto& s : tr.samples) {
      sup_mass = std::max(sup_mass, mass(s.field));
      sup_half = std::max(sup_half, std::pow(sobolev_norm(s.field, 0.5), 2));
    }
    lhs = q * q;
    rhs = sup_mass * sup_half;
    return rhs > 0.0 ? lhs / rhs : kNaN;
  };

  std::vector<double> nonlinear;
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < cfg.families.size(); ++i) {
    const RadialProfile& fam = cfg.families[i];
    const Field u0 = make_radial_data(grid, fam);
    const Trajectory tr = evolve(u0, cfg.evolution, describe(fam));
    for (const auto& w : tr.warnings) r.flags.push_back("family " + std::to_string(i) + ": " + w);
    Trajectory free = tr;
    const Field spec = to_frequency(u0);
    for (auto& s : free.samples) s.field = to_physical(linear_flow(spec, s.t));
    double lhs = 0.0, rhs = 0.0, lhs_lin = 0.0, rhs_lin = 0.0;
    const double rn = ratio_of(tr, lhs, rhs);
    const double rl = ratio_of(free, lhs_lin, rhs_lin);
    const double rel = std::isfinite(rn) && std::isfinite(rl) && rl > 0.0 ? rn / rl : kNaN;
    std::string status = "ok";
    if (!std::isfinite(rn)) {
      status = "vacuous";
      r.flags.push_back("family " + std::to_string(i) + " (" + describe(fam) + "): zero field, ratio 0/0");
    } else {
      nonlinear.push_back(rn);
    }
    r.cases.push_back({describe(fam), {lhs, rhs, rn, rl, rel}, status});
    rows.push_back({double(i), lhs, rhs, rn, rl, rel});
  }
  write_table(cfg.output_dir / "morawetz.csv",
              {"family", "lhs", "rhs", "ratio_nonlinear", "ratio_linear", "nonlinear_over_linear"}, rows);
  const Spread s = spread(nonlinear);
  const double rel = s.median > 0.0 ? s.max / s.median : kNaN;
  r.fits.push_back({"morawetz_constant", s.max, rel, s.count});
  r.assert_that("morawetz families", s.count >= 5, std::to_string(s.count) + " non-vacuous families (need >= 5)");
  r.assert_that("morawetz stable", s.median > 0.0 && s.max <= 3.0 * s.median,
                "max/median " + format_number(rel) + " (need <= 3)");
  write_summary(cfg, r);
  return r;
}

// ---------------------------------------------------------------------------

StudyReport run_scatter(const ExperimentConfig& cfg) {
  cfg.validate();
  StudyReport r = start_report(cfg);
  std::vector<double> extents = cfg.extents;
  if (extents.empty()) extents.push_back(cfg.grid.extent);
  r.columns = {"extent", "points_per_axis", "tail_warning_time", "final_diagnostic", "decreasing_final_half"};
  std::vector<std::vector<double>> rows;
  for (double L : extents) {
    const Grid grid = cfg.grid.with_extent(L).make();
    const Field u0 = cfg.initial_datum(grid);
    DiagnosticSeries cauchy{"pullback_cauchy_H1", {}, {}};
    DiagnosticSeries tail{"tail_mass", {}, {}};
    Field prev = to_frequency(u0);
    double warned_at = kNaN;
    const auto warnings = evolve_streaming(u0, cfg.evolution, [&](std::size_t i, double t, const Field& u) {
      const double frac = tail_mass_fraction(u);
      tail.push(t, frac);
      if (std::isnan(warned_at) && frac > 1e-4) warned_at = t;
      if (i == 0) return;
      Field cur = to_frequency(linear_flow(u, -t));
      cauchy.push(t, sobolev_norm(subtract(cur, prev), 1.0, false));
      prev = std::move(cur);
    });
    for (const auto& w : warnings) r.flags.push_back("L=" + format_number(L) + ": " + w);
    write_series(cfg.output_dir / ("scatter_L" + short_number(L) + ".csv"), cauchy);
    write_series(cfg.output_dir / ("tail_L" + short_number(L) + ".csv"), tail);

    bool decreasing = cauchy.values.size() >= 2;
    for (std::size_t n = cauchy.values.size() / 2 + 1; n < cauchy.values.size(); ++n)
      decreasing = decreasing && cauchy.values[n] <= cauchy.values[n - 1];
    const double last = cauchy.values.empty() ? 0.0 : cauchy.values.back();
    r.cases.push_back({"L=" + format_number(L), {L, double(grid.points_per_axis()), warned_at, last, decreasing ? 1.0 : 0.0}, "ok"});
    rows.push_back({L, double(grid.points_per_axis()), warned_at, last, decreasing ? 1.0 : 0.0});
    if (!std::isnan(warned_at))
      r.flags.push_back("tail mass above 1e-4 at t=" + format_number(warned_at) + " on L=" + format_number(L));
  }
  write_table(cfg.output_dir / "scatter_summary.csv",
              {"extent", "points_per_axis", "tail_warning_time", "final_diagnostic", "decreasing_final_half"}, rows);
  write_summary(cfg, r);
  return r;
}

StudyReport run_study(const ExperimentConfig& cfg) {
  switch (cfg.study) {
    case Study::sweep_n: return run_sweep_n(cfg);
    case Study::conserve: return run_conserve(cfg);
    case Study::inequalities: return run_inequalities(cfg);
    case Study::morawetz: return run_morawetz(cfg);
    case Study::scatter: return run_scatter(cfg);
  }
  throw ConfigError("unknown study");
}

}  // namespace nlsim
