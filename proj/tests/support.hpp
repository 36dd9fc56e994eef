#pragma once

// Shared fixtures for the test suite: the six reference parameter sets, an
// exact enumeration oracle for expected payoffs, and a deterministic sampler
// for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "trustdyn/numerics.hpp"
#include "trustdyn/params.hpp"
#include "trustdyn/payoffs.hpp"

namespace tsup {

inline trustdyn::GameParams fig2() { return trustdyn::validate_params(10, 0.1, 0.01, 0.05, 2, 1); }
inline trustdyn::GameParams fig3() { return trustdyn::validate_params(10, 0.2, 0.01, 0.05, 2, 1); }
inline trustdyn::GameParams fig4() { return trustdyn::validate_params(10, 0.1, 0.05, 0.05, 2, 1); }
inline trustdyn::GameParams fig5() { return trustdyn::validate_params(10, 0.2, 0.05, 0.05, 2, 1); }
inline trustdyn::GameParams fig6() { return trustdyn::validate_params(10, 0.1, 0.2, 0.05, 2, 1); }
inline trustdyn::GameParams fig7() { return trustdyn::validate_params(20, 0.1, 0.2, 0.05, 2, 1); }
inline trustdyn::GameParams fig9a() { return trustdyn::validate_params(7, 0.5, 0.14, 0.05, 3, 1); }
inline trustdyn::GameParams fig9b() { return trustdyn::validate_params(7, 0.5, 0.5, 0.05, 3, 1); }
inline trustdyn::GameParams fig10() { return trustdyn::validate_params(20, 0.1, 0.5, 0.5, 2, 1); }

inline std::vector<trustdyn::GameParams> figure_sets() {
  return {fig2(), fig3(), fig4(), fig5(), fig6(), fig7()};
}

// Exact factorials up to 19! (the largest co-player count used anywhere);
// all fit a uint64 and, after the multinomial division, a double.
inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= (std::uint64_t)k;
  return f;
}

inline double multinomial(int n, int a, int b, int c, int d) {
  return (double)(factorial(n) / factorial(a) / factorial(b) / factorial(c) /
                  factorial(d));
}

// Expected payoff of `focal` by direct enumeration of all co-player
// compositions, weighted by the multinomial distribution over the four
// strategy probabilities. Independent of every closed form under test.
inline double enumerated_expected_payoff(trustdyn::Strategy focal,
                                         const trustdyn::PopulationState& st,
                                         const trustdyn::GameParams& p) {
  const int m = p.N - 1;
  const double pr[4] = {st.x_i, st.y_i(p), st.x_t, st.y_t(p)};
  double total = 0;
  for (int np = 0; np <= m; ++np)
    for (int nm = 0; nm + np <= m; ++nm)
      for (int nt = 0; nt + nm + np <= m; ++nt) {
        const int nu = m - np - nm - nt;
        const double weight = multinomial(m, np, nm, nt, nu) *
                              trustdyn::pow_int(pr[0], np) *
                              trustdyn::pow_int(pr[1], nm) *
                              trustdyn::pow_int(pr[2], nt) *
                              trustdyn::pow_int(pr[3], nu);
        if (weight == 0.0) continue;
        total += weight * trustdyn::group_payoff(focal, {np, nm, nt, nu}, p);
      }
  return total;
}

// Deterministic property-test sampler. Uniforms come straight from the raw
// 64-bit stream so draws are identical across platforms.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return (double)(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int int_in(int lo, int hi) {  // inclusive ends
    return lo + (int)(gen_() % (std::uint64_t)(hi - lo + 1));
  }

  trustdyn::GameParams params(int n_lo = 3, int n_hi = 20) {
    return trustdyn::validate_params(int_in(n_lo, n_hi), uniform(0.02, 0.98),
                                     uniform(0.005, 2.0), uniform(0.02, 0.95),
                                     uniform(1.05, 6.0), uniform(0.25, 4.0));
  }

  // Interior state strictly inside the rectangle.
  trustdyn::PopulationState state(const trustdyn::GameParams& p) {
    return {p.alpha * uniform(0.01, 0.99), (1.0 - p.alpha) * uniform(0.01, 0.99)};
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace tsup
