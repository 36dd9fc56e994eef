#include "trustdyn/payoffs.hpp"

#include <stdexcept>

#include "trustdyn/numerics.hpp"

namespace trustdyn {

double ExpectedPayoffs::of(Strategy s) const {
  switch (s) {
    case Strategy::P: return f_P;
    case Strategy::M: return f_M;
    case Strategy::T: return f_T;
    case Strategy::U: return f_U;
  }
  throw std::logic_error("bad strategy");
}

double ExpectedPayoffs::phi_i(const PopulationState& st, const GameParams& p) const {
  return (st.x_i * f_P + st.y_i(p) * f_M) / p.alpha;
}

double ExpectedPayoffs::phi_t(const PopulationState& st, const GameParams& p) const {
  return (st.x_t * f_T + st.y_t(p) * f_U) / (1.0 - p.alpha);
}

double group_payoff(Strategy focal, const GroupComposition& c, const GameParams& p) {
  if (c.N_P < 0 || c.N_M < 0 || c.N_T < 0 || c.N_U < 0 || c.total() != p.N - 1)
    throw std::invalid_argument(
        "group composition must have non-negative counts summing to N - 1");
  const double tv = p.t_v;
  switch (focal) {
    case Strategy::P: {
      // No trustees among the co-players: nothing is invested or punished.
      if (c.N_P + c.N_M == p.N - 1) return 0.0;
      const int trustees = p.N - 1 - c.N_P - c.N_M;
      const double base = p.R_T * c.N_T / trustees * tv;
      // One punishment budget per sanctioned class that is present.
      const int sanctioned = (c.N_M > 0 ? 1 : 0) + (c.N_U > 0 ? 1 : 0);
      return base - (1.0 + p.lambda * sanctioned) * tv;
    }
    case Strategy::M: {
      if (c.N_P + c.N_M == p.N - 1) return 0.0;
      const int trustees = p.N - 1 - c.N_P - c.N_M;
      const double base = p.R_T * c.N_T / trustees * tv;
      // Each punisher's budget is split over the normal investors, focal
      // included, hence the N_M + 1 divisor.
      return base - tv - p.lambda * c.N_P / double(c.N_M + 1) * tv;
    }
    case Strategy::T: {
      const int investors = c.N_P + c.N_M;
      const int trustees = p.N - investors;  // focal included
      return p.R_T * investors / double(trustees) * tv;
    }
    case Strategy::U: {
      const int investors = c.N_P + c.N_M;
      const int trustees = p.N - investors;             // focal included
      const int untrustworthy = trustees - c.N_T;       // focal included
      return p.R_U * investors / double(trustees) * tv -
             p.lambda * c.N_P / double(untrustworthy) * tv;
    }
  }
  throw std::logic_error("bad strategy");
}

ExpectedPayoffs expected_payoffs(const PopulationState& st, const GameParams& p) {
  const int m = p.N - 1;
  const double a = p.alpha, xi = st.x_i, xt = st.x_t, tv = p.t_v;
  const double A = geom_sum(a, m);        // (1 - a^m) / (1 - a)
  const double a_m = pow_int(a, m);
  const double z1_m = pow_int(1.0 - a + xi, m);
  const double z2_m = pow_int(a + xt, m);
  const double xi_m = pow_int(xi, m);

  ExpectedPayoffs out;
  out.f_T = a * p.R_T * A * tv;
  out.f_U = a * (p.r + 1.0) * p.R_T * A * tv -
            p.lambda * xi * geom_sum(a + xt, m) * tv;
  out.f_P = xt * p.R_T * A * tv - (1.0 + 2.0 * p.lambda) * (1.0 - a_m) * tv +
            p.lambda * (z1_m - xi_m + z2_m - a_m) * tv;
  out.f_M = xt * p.R_T * A * tv - (1.0 - a_m) * tv -
            p.lambda * xi * geom_sum(1.0 - a + xi, m) * tv +
            p.lambda * xi * divided_difference(a, xi, m) * tv;
  return out;
}

double payoff_difference_f(double x_i, double x_t, const GameParams& p) {
  const int m = p.N - 1;
  const double a = p.alpha;
  const double z1 = 1.0 - a + x_i;
  const double z2 = a + x_t;
  double gs1 = 0, dd = 0;
  double p1 = 1, p2 = 1, xp = 1, ap = 1;
  for (int k = 0; k < m; ++k) {
    gs1 += p1;
    dd = a * dd + xp;
    p1 *= z1;
    p2 *= z2;
    xp *= x_i;
    ap *= a;
  }
  return x_i * gs1 - x_i * dd + p2 + p1 - xp - 2.0 + ap;
}

double payoff_difference_g(double x_i, double x_t, const GameParams& p) {
  const int m = p.N - 1;
  const double a = p.alpha;
  const double z2 = a + x_t;
  double gs2 = 0, A = 0;
  double p2 = 1, ap = 1;
  for (int k = 0; k < m; ++k) {
    gs2 += p2;
    A += ap;
    p2 *= z2;
    ap *= a;
  }
  return p.lambda * x_i * gs2 - a * p.r * p.R_T * A;
}

}  // namespace trustdyn
