#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trustdyn/params.hpp"

namespace trustdyn {

struct VectorField2 {
  double dx_i = 0, dx_t = 0;
};

struct IntegratorConfig {
  double step = 0.01;
  double t_max = 1e6;
  double convergence_eps = 1e-10;  // halt once max(|dx_i|, |dx_t|) drops below
  double clamp_eps = 1e-12;        // tolerated overshoot outside the rectangle
  int sample_stride = 0;           // record every k-th step; 0 = automatic
};

struct TrajectorySample {
  double t = 0;
  PopulationState state;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;  // always contains t = 0 and the end state
  PopulationState terminal;
  bool converged = false;
  double t_end = 0;
  int sample_stride = 1;  // decimation actually used
  std::optional<std::string> terminal_label;
};

// Reduced replicator vector field in factored form:
//   dx_i = (lambda t_v / alpha) * x_i (alpha - x_i) * f(x_i, x_t)
//   dx_t = (t_v / (1 - alpha)) * x_t (1 - alpha - x_t) * g(x_i, x_t)
// dx_t > 0 exactly when f_T > f_U. Exactly zero on the matching edges.
VectorField2 replicator_rhs(const PopulationState& st, const GameParams& p);

// The same field assembled from expected payoffs and community averages,
//   dx_i = x_i (f_P - phi_i),  dx_t = x_t (f_T - phi_t);
// kept as an independent cross-check path for the factored form.
VectorField2 replicator_rhs_from_payoffs(const PopulationState& st,
                                         const GameParams& p);

// Classical fixed-step RK4. After each full step the state is clamped back
// into the closed rectangle when it overshot by at most clamp_eps; a larger
// excursion throws std::runtime_error. Halts with converged = true when the
// vector-field max-norm falls below convergence_eps, else at t_max.
Trajectory integrate(const PopulationState& start, const GameParams& p,
                     const IntegratorConfig& cfg);

struct LabeledPoint {
  std::string label;
  PopulationState location;
};

// Label of the unique stable point within Euclidean distance eps of `state`,
// or nullopt. Throws std::runtime_error when two points both match (eps too
// large) and std::invalid_argument when stable_points is empty.
std::optional<std::string> classify_terminal(
    const PopulationState& state, const std::vector<LabeledPoint>& stable_points,
    double eps);

}  // namespace trustdyn
