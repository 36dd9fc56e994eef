#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trustdyn/basins.hpp"
#include "trustdyn/dynamics.hpp"
#include "trustdyn/params.hpp"
#include "trustdyn/regimes.hpp"

namespace trustdyn {

enum class CommandKind {
  Equilibria,
  Trajectory,
  PhasePortrait,
  RegimeMap,
  Basin,
  McCheck,
};

CommandKind parse_command(const std::string& name);
const char* command_name(CommandKind c);

enum class OutputFormat { Csv, Json };

struct TrajectoryOptions {
  std::vector<PopulationState> starts;
  double classify_eps = 1e-4;  // terminal-labeling radius
};

struct PortraitOptions {
  int grid = 21;  // points per axis, edges included
};

struct RegimeMapOptions {
  AxisRange lambda_range;
  AxisRange alpha_range;
  int lambda_count = 100;
  int alpha_count = 100;
};

struct BasinRunOptions {
  int grid_resolution = 101;
  double capture_eps = 1e-3;
  std::optional<SweepAxis> axis;  // nullopt: single run at the base params
  std::vector<double> values;
};

struct McCheckOptions {
  PopulationState state;
  long long samples = 100000;
};

struct ExperimentConfig {
  CommandKind command = CommandKind::Equilibria;
  GameParams params;
  IntegratorConfig integrator;
  TrajectoryOptions trajectory;
  PortraitOptions portrait;
  RegimeMapOptions regime;
  BasinRunOptions basin;
  McCheckOptions mc;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out_path;  // may be empty; the CLI then requires --out
  OutputFormat format = OutputFormat::Csv;
};

// Parses a JSON config document. Unknown keys and type mismatches throw
// std::invalid_argument naming the offending field.
ExperimentConfig parse_config(const std::string& json_text);

// Applies one dotted-path `key=value` override onto a JSON document and
// returns the updated text. The value is parsed as JSON when possible and
// treated as a string otherwise.
std::string apply_override(const std::string& json_text,
                           const std::string& assignment);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

}  // namespace trustdyn
