#pragma once

#include <string>

#include "trustdyn/io.hpp"

namespace trustdyn {

struct RunOutput {
  std::string text;   // complete output file body
  int exit_code = 0;  // non-zero: data-level inconsistency (mc-check |z| > 5)
};

RunOutput run_equilibria(const ExperimentConfig& cfg);
RunOutput run_trajectory(const ExperimentConfig& cfg);
RunOutput run_phase_portrait(const ExperimentConfig& cfg);
RunOutput run_regime_map(const ExperimentConfig& cfg);
RunOutput run_basin(const ExperimentConfig& cfg);
RunOutput run_mc_check(const ExperimentConfig& cfg);

// Dispatches on cfg.command.
RunOutput run_command(const ExperimentConfig& cfg);

}  // namespace trustdyn
