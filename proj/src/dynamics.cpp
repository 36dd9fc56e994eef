#include "trustdyn/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "trustdyn/numerics.hpp"
#include "trustdyn/payoffs.hpp"

namespace trustdyn {

VectorField2 replicator_rhs(const PopulationState& st, const GameParams& p) {
  // Fused evaluation of f and g: one pass over the shared power chains.
  const int m = p.N - 1;
  const double a = p.alpha, xi = st.x_i, xt = st.x_t;
  const double z1 = 1.0 - a + xi;
  const double z2 = a + xt;
  double gs1 = 0, gs2 = 0, dd = 0, A = 0;
  double p1 = 1, p2 = 1, xp = 1, ap = 1;
  for (int k = 0; k < m; ++k) {
    gs1 += p1;
    gs2 += p2;
    A += ap;
    dd = a * dd + xp;
    p1 *= z1;
    p2 *= z2;
    xp *= xi;
    ap *= a;
  }
  const double f = xi * gs1 - xi * dd + p2 + p1 - xp - 2.0 + ap;
  const double g = p.lambda * xi * gs2 - a * p.r * p.R_T * A;
  return {(p.lambda * p.t_v / a) * xi * (a - xi) * f,
          (p.t_v / (1.0 - a)) * xt * (1.0 - a - xt) * g};
}

VectorField2 replicator_rhs_from_payoffs(const PopulationState& st,
                                         const GameParams& p) {
  const ExpectedPayoffs fp = expected_payoffs(st, p);
  return {st.x_i * (fp.f_P - fp.phi_i(st, p)),
          st.x_t * (fp.f_T - fp.phi_t(st, p))};
}

namespace {

inline double clamp_coord(double v, double hi, double eps, const char* what) {
  if (!std::isfinite(v))
    throw std::runtime_error(std::string("integration produced a non-finite ") + what);
  if (v < 0.0) {
    if (v < -eps)
      throw std::runtime_error(std::string("integration left the state rectangle: ") + what);
    return 0.0;
  }
  if (v > hi) {
    if (v > hi + eps)
      throw std::runtime_error(std::string("integration left the state rectangle: ") + what);
    return hi;
  }
  return v;
}

}  // namespace

Trajectory integrate(const PopulationState& start, const GameParams& p,
                     const IntegratorConfig& cfg) {
  if (!(cfg.step > 0)) throw std::invalid_argument("integrator step must be positive");
  if (!(cfg.t_max > 0)) throw std::invalid_argument("integrator t_max must be positive");
  if (!(cfg.convergence_eps > 0))
    throw std::invalid_argument("integrator convergence_eps must be positive");

  const double h = cfg.step;
  const long long max_steps = (long long)std::ceil(cfg.t_max / h);
  const int stride = cfg.sample_stride > 0
                         ? cfg.sample_stride
                         : (int)std::max(1LL, max_steps / 20000);

  Trajectory out;
  out.sample_stride = stride;
  PopulationState s = start;
  double t = 0;
  out.samples.push_back({0.0, s});

  for (long long k = 0; k < max_steps; ++k) {
    const VectorField2 k1 = replicator_rhs(s, p);
    if (std::max(std::fabs(k1.dx_i), std::fabs(k1.dx_t)) < cfg.convergence_eps) {
      out.converged = true;
      break;
    }
    const PopulationState s2{s.x_i + 0.5 * h * k1.dx_i, s.x_t + 0.5 * h * k1.dx_t};
    const VectorField2 k2 = replicator_rhs(s2, p);
    const PopulationState s3{s.x_i + 0.5 * h * k2.dx_i, s.x_t + 0.5 * h * k2.dx_t};
    const VectorField2 k3 = replicator_rhs(s3, p);
    const PopulationState s4{s.x_i + h * k3.dx_i, s.x_t + h * k3.dx_t};
    const VectorField2 k4 = replicator_rhs(s4, p);
    s.x_i += h / 6.0 * (k1.dx_i + 2.0 * k2.dx_i + 2.0 * k3.dx_i + k4.dx_i);
    s.x_t += h / 6.0 * (k1.dx_t + 2.0 * k2.dx_t + 2.0 * k3.dx_t + k4.dx_t);
    s.x_i = clamp_coord(s.x_i, p.alpha, cfg.clamp_eps, "x_i");
    s.x_t = clamp_coord(s.x_t, 1.0 - p.alpha, cfg.clamp_eps, "x_t");
    t = (k + 1) * h;
    if ((k + 1) % stride == 0) out.samples.push_back({t, s});
  }

  if (out.samples.back().t != t) out.samples.push_back({t, s});
  out.terminal = s;
  out.t_end = t;
  return out;
}

std::optional<std::string> classify_terminal(
    const PopulationState& state, const std::vector<LabeledPoint>& stable_points,
    double eps) {
  if (stable_points.empty())
    throw std::invalid_argument("classify_terminal requires at least one stable point");
  const LabeledPoint* hit = nullptr;
  const double eps_sq = eps * eps;
  for (const auto& q : stable_points) {
    const double dx = state.x_i - q.location.x_i;
    const double dy = state.x_t - q.location.x_t;
    if (dx * dx + dy * dy <= eps_sq) {
      if (hit)
        throw std::runtime_error(
            "classify_terminal: two stable points within eps; decrease eps");
      hit = &q;
    }
  }
  if (!hit) return std::nullopt;
  return hit->label;
}

}  // namespace trustdyn
