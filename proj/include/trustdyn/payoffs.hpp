#pragma once

#include "trustdyn/params.hpp"

namespace trustdyn {

// Counts of each strategy among the N - 1 co-players of a focal individual.
struct GroupComposition {
  int N_P = 0, N_M = 0, N_T = 0, N_U = 0;

  int total() const { return N_P + N_M + N_T + N_U; }
};

struct ExpectedPayoffs {
  double f_P = 0, f_M = 0, f_T = 0, f_U = 0;

  double of(Strategy s) const;
  // Community averages within the investor / trustee populations.
  double phi_i(const PopulationState& st, const GameParams& p) const;
  double phi_t(const PopulationState& st, const GameParams& p) const;
};

// Exact payoff of a focal individual playing `focal` against co-players
// `comp`. Throws std::invalid_argument when comp has negative counts or does
// not sum to N - 1.
double group_payoff(Strategy focal, const GroupComposition& comp,
                    const GameParams& p);

// Closed-form expected payoffs of all four strategies at a population state.
// All ratio terms are evaluated as geometric / divided-difference sums, so the
// values are finite and continuous on the closed rectangle, including the
// edges x_i = alpha and x_t = 1 - alpha.
ExpectedPayoffs expected_payoffs(const PopulationState& st, const GameParams& p);

// The factored payoff-gap functions driving the reduced dynamics:
//   lambda * t_v * f(x_i, x_t) == f_P - f_M
//   t_v * g(x_i, x_t) == f_T - f_U
double payoff_difference_f(double x_i, double x_t, const GameParams& p);
double payoff_difference_g(double x_i, double x_t, const GameParams& p);

}  // namespace trustdyn
