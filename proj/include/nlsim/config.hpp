#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "nlsim/field.hpp"
#include "nlsim/grid.hpp"
#include "nlsim/radial_data.hpp"
#include "nlsim/trajectory.hpp"

namespace nlsim {

enum class Study { sweep_n, conserve, inequalities, morawetz, scatter };

const char* to_string(Study s);
/// Accepts both "sweep_n" and the CLI spelling "sweep-n".
Study parse_study(const std::string& name);

struct GridSpec {
  int dim = 2;
  int n = 64;
  double extent = 16.0;

  Grid make() const { return Grid(dim, extent, n); }
  /// Same spacing on a box of a different extent (n rounded to even).
  GridSpec with_extent(double new_extent) const;
};

struct ExperimentConfig {
  Study study = Study::conserve;
  std::uint64_t seed = 0;
  GridSpec grid;
  EvolutionParams evolution;
  std::vector<double> cutoffs;  // the I-operator N values
  double s = 0.75;
  RadialProfile datum;
  double datum_band_limit = 0.0;  // sharp low-pass applied to the datum when > 0
  std::filesystem::path output_dir = "out";

  // inequalities
  int corpus_size = 100;
  int smoothing_corpus_size = 50;
  double strichartz_time = 0.25;
  GridSpec grid3{3, 32, 8.0};
  GridSpec radial_grid{3, 80, 20.0};

  // morawetz
  std::vector<RadialProfile> families;

  // scatter
  std::vector<double> extents;

  /// The configured datum on `grid`, band-limited if requested.
  Field initial_datum(const Grid& grid) const;

  /// Cross-field consistency; throws ConfigError. Called by parse_config.
  void validate() const;
};

/// Flat "key = value" lines grouped under [section] headers; '#' starts a
/// comment. Unknown sections or keys are ConfigErrors.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace nlsim
