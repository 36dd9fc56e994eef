#include "trustdyn/montecarlo.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace trustdyn {

const McEstimate& McExpectedPayoffs::of(Strategy s) const {
  switch (s) {
    case Strategy::P: return P;
    case Strategy::M: return M;
    case Strategy::T: return T;
    case Strategy::U: return U;
  }
  throw std::logic_error("bad strategy");
}

namespace {

// Raw-bit uniform in [0, 1): the standard distributions are not specified
// bit-for-bit across implementations, this is.
inline double next_uniform(std::mt19937_64& gen) {
  return (gen() >> 11) * 0x1.0p-53;
}

McEstimate estimate_for(Strategy focal, const PopulationState& st,
                        const GameParams& p, long long n,
                        std::mt19937_64& gen) {
  // Cumulative category bounds for P, M, T (else U).
  const double c_p = st.x_i;
  const double c_m = p.alpha;
  const double c_t = p.alpha + st.x_t;
  double sum = 0, sum_sq = 0;
  for (long long s = 0; s < n; ++s) {
    GroupComposition comp;
    for (int k = 0; k < p.N - 1; ++k) {
      const double u = next_uniform(gen);
      if (u < c_p)
        ++comp.N_P;
      else if (u < c_m)
        ++comp.N_M;
      else if (u < c_t)
        ++comp.N_T;
      else
        ++comp.N_U;
    }
    const double v = group_payoff(focal, comp, p);
    sum += v;
    sum_sq += v * v;
  }
  McEstimate e;
  e.mean = sum / n;
  if (n > 1) {
    const double var = (sum_sq - sum * sum / n) / (n - 1);
    e.std_error = var > 0 ? std::sqrt(var / n) : 0.0;
  }
  return e;
}

}  // namespace

McExpectedPayoffs mc_expected_payoffs(const PopulationState& st,
                                      const GameParams& p,
                                      long long sample_count,
                                      std::uint64_t seed) {
  if (sample_count < 1)
    throw std::invalid_argument("sample_count must be at least 1");
  std::mt19937_64 gen(seed);
  McExpectedPayoffs out;
  out.P = estimate_for(Strategy::P, st, p, sample_count, gen);
  out.M = estimate_for(Strategy::M, st, p, sample_count, gen);
  out.T = estimate_for(Strategy::T, st, p, sample_count, gen);
  out.U = estimate_for(Strategy::U, st, p, sample_count, gen);
  return out;
}

}  // namespace trustdyn
