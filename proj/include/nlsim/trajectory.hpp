#pragma once

#include <string>
#include <vector>

#include "nlsim/field.hpp"

namespace nlsim {

/// Parameters of the defocusing NLS  (i d_t + Delta) u = |u|^{2k} u.
struct EvolutionParams {
  int dim = 2;
  int k = 1;
  double dt = 1e-3;
  double t_final = 1.0;
  int sample_every = 1;
  bool dealias = true;

  /// Throws DomainError on inconsistent values (d = 3 requires k = 1).
  void validate() const;
  /// Number of Strang steps actually taken: (samples - 1) * sample_every.
  long total_steps() const;
  /// ceil(t_final / (dt sample_every)) + 1.
  long sample_count() const;
};

/// 0.5 dx^2, the default accuracy-motivated step for a grid.
double default_time_step(const Grid& grid);

struct TrajectorySample {
  double t;
  Field field;
};

struct Trajectory {
  EvolutionParams params;
  std::vector<TrajectorySample> samples;
  std::string provenance;
  std::vector<std::string> warnings;

  double start_time() const { return samples.front().t; }
  double end_time() const { return samples.back().t; }
};

}  // namespace nlsim
