#include "trustdyn/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trustdyn/payoffs.hpp"

namespace trustdyn {

const char* equilibrium_name(EquilibriumLabel l) {
  switch (l) {
    case EquilibriumLabel::MU: return "M+U";
    case EquilibriumLabel::MT: return "M+T";
    case EquilibriumLabel::PU: return "P+U";
    case EquilibriumLabel::PT: return "P+T";
    case EquilibriumLabel::PTU: return "P+T+U";
    case EquilibriumLabel::PMU: return "P+M+U";
    case EquilibriumLabel::PMT: return "P+M+T";
    case EquilibriumLabel::Interior: return "INTERIOR";
  }
  return "?";
}

const char* stability_name(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::Marginal: return "marginal";
  }
  return "?";
}

double alpha_star(int N) {
  if (N < 3) throw std::invalid_argument("N must exceed 2");
  if (N == 3) return 1.0;
  // h(a) = (N-1)a - (N-2)a^{N-1} - 1 is negative on (0, alpha_star) and
  // positive on (alpha_star, 1), so a fixed bracket works for every N.
  auto h = [N](double a) {
    return (N - 1) * a - (N - 2) * pow_int(a, N - 1) - 1.0;
  };
  return bisect(h, 1e-12, 1.0 - 1e-9);
}

ThresholdSet thresholds(const GameParams& p) {
  ThresholdSet t;
  t.alpha_star = alpha_star(p.N);
  t.lambda_low = p.r * p.R_T * geom_sum(p.alpha, p.N - 1) / (p.N - 1);
  t.lambda_high = p.r * p.R_T;
  return t;
}

double phi1(double x, const GameParams& p) {
  return p.lambda * geom_sum(p.alpha + x, p.N - 1) -
         p.r * p.R_T * geom_sum(p.alpha, p.N - 1);
}

double phi2(double x, const GameParams& p) {
  return payoff_difference_f(x, 0.0, p);
}

double phi3(double x, const GameParams& p) {
  return payoff_difference_f(x, 1.0 - p.alpha, p);
}

std::optional<double> root_phi1(const GameParams& p) {
  const double hi = 1.0 - p.alpha;
  if (!(phi1(0.0, p) < 0.0) || !(phi1(hi, p) > 0.0)) return std::nullopt;
  return bisect([&](double x) { return phi1(x, p); }, 0.0, hi);
}

std::optional<double> root_phi2(const GameParams& p) {
  if (!(phi2(0.0, p) < 0.0) || !(phi2(p.alpha, p) > 0.0)) return std::nullopt;
  return bisect([&](double x) { return phi2(x, p); }, 0.0, p.alpha);
}

double root_phi3(const GameParams& p) {
  if (!(phi3(0.0, p) < 0.0) || !(phi3(p.alpha, p) > 0.0))
    throw std::logic_error("phi3 lost its guaranteed sign change");
  return bisect([&](double x) { return phi3(x, p); }, 0.0, p.alpha);
}

Matrix2 jacobian(const PopulationState& s, const GameParams& p) {
  const int m = p.N - 1;
  const double a = p.alpha, xi = s.x_i, xt = s.x_t, tv = p.t_v;
  const double z1 = 1.0 - a + xi;
  const double z2 = a + xt;

  const double gs1 = geom_sum(z1, m);
  const double gs2 = geom_sum(z2, m);
  const double A = geom_sum(a, m);
  const double dd = divided_difference(a, xi, m);
  const double f = xi * gs1 - xi * dd + pow_int(z2, m) + pow_int(z1, m) -
                   pow_int(xi, m) - 2.0 + pow_int(a, m);
  const double g = p.lambda * xi * gs2 - a * p.r * p.R_T * A;

  const double df_dxi = gs1 + xi * geom_sum_deriv(z1, m) -
                        divided_difference_b_deriv(a, xi, m) +
                        m * (pow_int(z1, m - 1) - pow_int(xi, m - 1));
  const double df_dxt = m * pow_int(z2, m - 1);
  const double dg_dxi = p.lambda * gs2;
  const double dg_dxt = p.lambda * xi * geom_sum_deriv(z2, m);

  const double ci = p.lambda * tv / a;
  const double ct = tv / (1.0 - a);
  Matrix2 j;
  j.a11 = ci * ((a - 2.0 * xi) * f + xi * (a - xi) * df_dxi);
  j.a12 = ci * xi * (a - xi) * df_dxt;
  j.a21 = ct * xt * (1.0 - a - xt) * dg_dxi;
  j.a22 = ct * ((1.0 - a - 2.0 * xt) * g + xt * (1.0 - a - xt) * dg_dxt);
  return j;
}

Stability classify_stability(const std::array<std::complex<double>, 2>& eigs,
                             double tol) {
  const double re1 = eigs[0].real(), re2 = eigs[1].real();
  if (re1 < -tol && re2 < -tol) return Stability::Stable;
  if (re1 > tol || re2 > tol) return Stability::Unstable;
  return Stability::Marginal;
}

Stability classify_stability(const EquilibriumReport& report, double tol) {
  return classify_stability(report.eigenvalues, tol);
}

EquilibriumReport analyze_point(EquilibriumLabel label, const PopulationState& loc,
                                const GameParams& p, double tol) {
  EquilibriumReport r;
  r.label = label;
  r.location = loc;
  r.jacobian = jacobian(loc, p);
  r.eigenvalues = eigenvalues(r.jacobian);
  r.stability = classify_stability(r.eigenvalues, tol);
  r.analyzed = true;
  return r;
}

std::vector<EquilibriumReport> enumerate_boundary_equilibria(const GameParams& p) {
  const double a = p.alpha, b = 1.0 - p.alpha;
  std::vector<EquilibriumReport> out;
  auto add = [&out](EquilibriumLabel l, double xi, double xt) {
    EquilibriumReport r;
    r.label = l;
    r.location = {xi, xt};
    out.push_back(r);
  };
  add(EquilibriumLabel::MU, 0.0, 0.0);
  add(EquilibriumLabel::MT, 0.0, b);
  add(EquilibriumLabel::PU, a, 0.0);
  add(EquilibriumLabel::PT, a, b);
  if (auto xt1 = root_phi1(p)) add(EquilibriumLabel::PTU, a, *xt1);
  if (auto xi1 = root_phi2(p)) add(EquilibriumLabel::PMU, *xi1, 0.0);
  add(EquilibriumLabel::PMT, root_phi3(p), b);
  return out;
}

std::vector<EquilibriumReport> find_interior_fixed_points(const GameParams& p,
                                                          double tol) {
  const double a = p.alpha;
  const int m = p.N - 1;
  const double arA = a * p.r * p.R_T * geom_sum(a, m);
  // g = 0 determines x_i as a function of x_t; substitute into f.
  auto xi_of = [&](double xt) { return arA / (p.lambda * geom_sum(a + xt, m)); };
  auto F = [&](double xt) { return payoff_difference_f(xi_of(xt), xt, p); };

  const double hi = 1.0 - a;
  const int steps = (int)std::ceil(hi / 1e-4);
  const double dx = hi / steps;
  std::vector<EquilibriumReport> out;
  double x_prev = 0.5 * dx;  // midpoint grid stays off both edges
  double f_prev = F(x_prev);
  for (int k = 1; k < steps; ++k) {
    const double x = dx * (k + 0.5);
    const double fx = F(x);
    if ((f_prev < 0.0 && fx > 0.0) || (f_prev > 0.0 && fx < 0.0)) {
      const double xt = bisect(F, x_prev, x);
      const double xi = xi_of(xt);
      if (xi > 0.0 && xi < a) {
        EquilibriumReport r = analyze_point(EquilibriumLabel::Interior, {xi, xt}, p, tol);
        if (!(r.eigenvalues[0].real() > 0.0 || r.eigenvalues[1].real() > 0.0))
          throw std::runtime_error(
              "interior fixed point without a positive eigenvalue: "
              "contradicts the instability property");
        out.push_back(r);
      }
    }
    x_prev = x;
    f_prev = fx;
  }
  return out;
}

std::optional<EquilibriumReport> find_interior_fixed_point(const GameParams& p,
                                                           double tol) {
  auto all = find_interior_fixed_points(p, tol);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<EquilibriumReport> equilibrium_reports(const GameParams& p, double tol) {
  std::vector<EquilibriumReport> out;
  for (const auto& b : enumerate_boundary_equilibria(p))
    out.push_back(analyze_point(b.label, b.location, p, tol));
  for (auto& r : find_interior_fixed_points(p, tol)) out.push_back(r);
  return out;
}

}  // namespace trustdyn
