#pragma once

namespace trustdyn {

// Full parameterization of the N-player trust game. R_U is derived as
// (1 + r) * R_T at validation time and stored alongside the inputs.
struct GameParams {
  int N = 0;           // group size, N >= 3
  double alpha = 0;    // investor fraction, 0 < alpha < 1
  double lambda = 0;   // punishment intensity, > 0
  double r = 0;        // temptation ratio, 0 < r < 1
  double R_T = 0;      // trustworthy multiplication factor, > 1
  double t_v = 0;      // investment stake, > 0
  double R_U = 0;      // derived: (1 + r) * R_T
};

// Reduced population state on the rectangle [0, alpha] x [0, 1 - alpha].
struct PopulationState {
  double x_i = 0;  // fraction of punishing investors
  double x_t = 0;  // fraction of trustworthy trustees

  double y_i(const GameParams& p) const { return p.alpha - x_i; }        // normal investors
  double y_t(const GameParams& p) const { return 1.0 - p.alpha - x_t; }  // untrustworthy trustees
};

enum class Strategy { P, M, T, U };

const char* strategy_name(Strategy s);

// Validates raw inputs against the model constraints and fills in R_U.
// Throws std::invalid_argument naming the offending field.
GameParams validate_params(int N, double alpha, double lambda, double r,
                           double R_T, double t_v);

// True when the state lies in the closed rectangle, allowing `slack`
// overshoot beyond each edge.
bool state_in_rectangle(const PopulationState& s, const GameParams& p,
                        double slack = 0.0);

}  // namespace trustdyn
