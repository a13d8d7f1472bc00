#pragma once

#include "nlsim/config.hpp"
#include "nlsim/report.hpp"

namespace nlsim {

/// Each study writes its CSV files and summary.json into cfg.output_dir.
StudyReport run_sweep_n(const ExperimentConfig& cfg);
StudyReport run_conserve(const ExperimentConfig& cfg);
StudyReport run_inequalities(const ExperimentConfig& cfg);
StudyReport run_morawetz(const ExperimentConfig& cfg);
StudyReport run_scatter(const ExperimentConfig& cfg);

StudyReport run_study(const ExperimentConfig& cfg);

}  // namespace nlsim
