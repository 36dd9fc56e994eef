#include "trustdyn/basins.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <thread>

#include "trustdyn/equilibria.hpp"

namespace trustdyn {

const char* sweep_axis_name(SweepAxis a) {
  return a == SweepAxis::Alpha ? "alpha" : "lambda";
}

namespace {

// Cell verdicts: 0 unresolved, 1 attracted to P+T, 2 reached another
// stable point.
int8_t run_cell(PopulationState s, const GameParams& p,
                const IntegratorConfig& cfg, double capture_eps,
                const std::vector<PopulationState>& stable, size_t pt_index) {
  const double h = cfg.step;
  const long long max_steps = (long long)std::ceil(cfg.t_max / h);
  const double cap_sq = capture_eps * capture_eps;
  for (long long k = 0; k < max_steps; ++k) {
    for (size_t q = 0; q < stable.size(); ++q) {
      const double dx = s.x_i - stable[q].x_i;
      const double dy = s.x_t - stable[q].x_t;
      if (dx * dx + dy * dy <= cap_sq) return q == pt_index ? 1 : 2;
    }
    const VectorField2 k1 = replicator_rhs(s, p);
    if (std::max(std::fabs(k1.dx_i), std::fabs(k1.dx_t)) < cfg.convergence_eps)
      return 0;  // stalled away from every stable point (saddle/edge)
    const PopulationState s2{s.x_i + 0.5 * h * k1.dx_i, s.x_t + 0.5 * h * k1.dx_t};
    const VectorField2 k2 = replicator_rhs(s2, p);
    const PopulationState s3{s.x_i + 0.5 * h * k2.dx_i, s.x_t + 0.5 * h * k2.dx_t};
    const VectorField2 k3 = replicator_rhs(s3, p);
    const PopulationState s4{s.x_i + h * k3.dx_i, s.x_t + h * k3.dx_t};
    const VectorField2 k4 = replicator_rhs(s4, p);
    s.x_i += h / 6.0 * (k1.dx_i + 2.0 * k2.dx_i + 2.0 * k3.dx_i + k4.dx_i);
    s.x_t += h / 6.0 * (k1.dx_t + 2.0 * k2.dx_t + 2.0 * k3.dx_t + k4.dx_t);
    // Same overshoot contract as integrate().
    auto clamp = [&](double v, double hi_v) {
      if (v < 0.0) {
        if (v < -cfg.clamp_eps)
          throw std::runtime_error("basin cell left the state rectangle");
        return 0.0;
      }
      if (v > hi_v) {
        if (v > hi_v + cfg.clamp_eps)
          throw std::runtime_error("basin cell left the state rectangle");
        return hi_v;
      }
      return v;
    };
    s.x_i = clamp(s.x_i, p.alpha);
    s.x_t = clamp(s.x_t, 1.0 - p.alpha);
  }
  return 0;
}

}  // namespace

BasinResult basin_fraction(const GameParams& p, int grid_resolution,
                           const IntegratorConfig& cfg, const BasinOptions& opt) {
  if (grid_resolution < 1)
    throw std::invalid_argument("grid_resolution must be at least 1");
  if (!(opt.capture_eps > 0))
    throw std::invalid_argument("capture_eps must be positive");

  std::vector<PopulationState> stable;
  size_t pt_index = SIZE_MAX;
  for (const auto& r : equilibrium_reports(p)) {
    if (r.stability != Stability::Stable) continue;
    if (r.label == EquilibriumLabel::PT) pt_index = stable.size();
    stable.push_back(r.location);
  }

  const int G = grid_resolution;
  const long long total = (long long)G * G;
  std::vector<int8_t> verdict((size_t)total, 0);

  auto work = [&](long long lo, long long hi) {
    for (long long idx = lo; idx < hi; ++idx) {
      const long long i = idx / G, j = idx % G;
      const PopulationState start{(i + 0.5) * p.alpha / G,
                                  (j + 0.5) * (1.0 - p.alpha) / G};
      verdict[(size_t)idx] =
          run_cell(start, p, cfg, opt.capture_eps, stable, pt_index);
    }
  };

  const int threads = std::max(1, opt.threads);
  if (threads == 1 || total < 2) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors((size_t)threads);
    const long long chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const long long lo = t * chunk;
      if (lo >= total) break;
      pool.emplace_back([&, t, lo] {
        try {
          work(lo, std::min(total, lo + chunk));
        } catch (...) {
          errors[(size_t)t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  BasinResult res;
  res.grid_resolution = G;
  for (long long idx = 0; idx < total; ++idx) {
    switch (verdict[(size_t)idx]) {
      case 1: ++res.attracted; ++res.resolved; break;
      case 2: ++res.resolved; break;
      default: ++res.unresolved;
    }
  }
  if (res.unresolved > opt.unresolved_budget * total)
    throw std::runtime_error(
        "basin estimation left more than the unresolved budget of cells "
        "unresolved; increase t_max or loosen capture_eps");
  res.fraction = res.resolved > 0 ? (double)res.attracted / res.resolved : 0.0;
  res.absolute_area = res.fraction * p.alpha * (1.0 - p.alpha);
  return res;
}

std::vector<std::pair<double, BasinResult>> basin_sweep(
    SweepAxis axis, const std::vector<double>& values, const GameParams& base,
    int grid_resolution, const IntegratorConfig& cfg, const BasinOptions& opt) {
  std::vector<double> ordered = values;
  std::stable_sort(ordered.begin(), ordered.end());
  std::vector<std::pair<double, BasinResult>> out;
  out.reserve(ordered.size());
  for (double v : ordered) {
    const GameParams p = axis == SweepAxis::Alpha
                             ? validate_params(base.N, v, base.lambda, base.r,
                                               base.R_T, base.t_v)
                             : validate_params(base.N, base.alpha, v, base.r,
                                               base.R_T, base.t_v);
    out.emplace_back(v, basin_fraction(p, grid_resolution, cfg, opt));
  }
  return out;
}

}  // namespace trustdyn
