#pragma once

#include <cstdint>

#include "trustdyn/params.hpp"
#include "trustdyn/payoffs.hpp"

namespace trustdyn {

struct McEstimate {
  double mean = 0;
  double std_error = 0;  // 0 when sample_count < 2
};

struct McExpectedPayoffs {
  McEstimate P, M, T, U;

  const McEstimate& of(Strategy s) const;
};

// Monte-Carlo oracle for expected_payoffs: for each focal strategy, draws
// `sample_count` co-player compositions as N - 1 independent categorical
// draws with probabilities (x_i, alpha - x_i, x_t, 1 - alpha - x_t),
// evaluates group_payoff, and reports sample means with standard errors.
// Fully deterministic given the seed.
McExpectedPayoffs mc_expected_payoffs(const PopulationState& st,
                                      const GameParams& p,
                                      long long sample_count,
                                      std::uint64_t seed);

}  // namespace trustdyn
