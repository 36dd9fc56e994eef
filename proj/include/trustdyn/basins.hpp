#pragma once

#include <utility>
#include <vector>

#include "trustdyn/dynamics.hpp"
#include "trustdyn/params.hpp"

namespace trustdyn {

struct BasinResult {
  double fraction = 0;       // share of resolved cells attracted to P+T
  double absolute_area = 0;  // fraction * alpha * (1 - alpha)
  int grid_resolution = 0;
  long long attracted = 0;   // resolved cells that reached P+T
  long long resolved = 0;
  long long unresolved = 0;  // cells with no verdict by t_max
};

struct BasinOptions {
  double capture_eps = 1e-3;        // stop a cell within this distance of a stable point
  double unresolved_budget = 0.01;  // fail loudly above this share of cells
  int threads = 1;
};

// Integrates grid_resolution^2 cell-centered starts ((i+1/2) alpha / G,
// (j+1/2)(1-alpha) / G) and reports the fraction attracted to (alpha, 1-alpha).
// The stable set is derived from the Jacobian classification, so the fraction
// is exactly 0 whenever P+T is not stable. Cells are independent; results are
// deterministic and identical for any thread count. Throws std::runtime_error
// when more than unresolved_budget of the cells stay unresolved.
BasinResult basin_fraction(const GameParams& p, int grid_resolution,
                           const IntegratorConfig& cfg,
                           const BasinOptions& opt = {});

enum class SweepAxis { Alpha, Lambda };

const char* sweep_axis_name(SweepAxis a);

// Maps basin_fraction over ascending axis values, re-validating the modified
// parameter set at every point.
std::vector<std::pair<double, BasinResult>> basin_sweep(
    SweepAxis axis, const std::vector<double>& values, const GameParams& base,
    int grid_resolution, const IntegratorConfig& cfg,
    const BasinOptions& opt = {});

}  // namespace trustdyn
