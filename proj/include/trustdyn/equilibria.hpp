#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "trustdyn/numerics.hpp"
#include "trustdyn/params.hpp"

namespace trustdyn {

// The at-most-eight fixed points of the reduced system: four corners, up to
// three edge points, and interior roots of f = g = 0.
enum class EquilibriumLabel { MU, MT, PU, PT, PTU, PMU, PMT, Interior };

const char* equilibrium_name(EquilibriumLabel l);  // "M+U", ..., "INTERIOR"

enum class Stability { Stable, Unstable, Marginal };

const char* stability_name(Stability s);

struct EquilibriumReport {
  EquilibriumLabel label = EquilibriumLabel::Interior;
  PopulationState location;
  Matrix2 jacobian;
  std::array<std::complex<double>, 2> eigenvalues{};
  Stability stability = Stability::Marginal;
  bool analyzed = false;  // jacobian/eigenvalues/stability filled
};

struct ThresholdSet {
  double alpha_star = 1;   // root of (N-1)a - (N-2)a^{N-1} = 1 in (0, 1]
  double lambda_low = 0;   // r R_T (1 - alpha^{N-1}) / ((N-1)(1 - alpha))
  double lambda_high = 0;  // r R_T
};

// The regime-splitting investor fraction: exactly 1 for N = 3, else the
// unique root of (N-1)a - (N-2)a^{N-1} = 1 in (0, 1), bisected to 1e-12.
double alpha_star(int N);

ThresholdSet thresholds(const GameParams& p);

// Monotone edge-gap functions whose roots locate the non-corner boundary
// equilibria: phi1 on [0, 1-alpha] (edge x_i = alpha), phi2 on [0, alpha]
// (edge x_t = 0), phi3 on [0, alpha] (edge x_t = 1-alpha). All strictly
// increasing on their intervals; phi3 = phi2 + 1 - alpha^{N-1}.
double phi1(double x, const GameParams& p);
double phi2(double x, const GameParams& p);
double phi3(double x, const GameParams& p);

// Roots to 1e-12 where the endpoint sign condition holds. root_phi1 exists
// iff lambda_low < lambda < lambda_high; root_phi2 iff alpha > alpha_star;
// root_phi3 always.
std::optional<double> root_phi1(const GameParams& p);
std::optional<double> root_phi2(const GameParams& p);
double root_phi3(const GameParams& p);

// Analytic Jacobian of the reduced vector field at any point of the closed
// rectangle.
Matrix2 jacobian(const PopulationState& location, const GameParams& p);

// Stable iff both real parts < -tol, unstable iff any real part > +tol,
// marginal otherwise.
Stability classify_stability(const std::array<std::complex<double>, 2>& eigenvalues,
                             double tol = 1e-9);
Stability classify_stability(const EquilibriumReport& report, double tol = 1e-9);

// Fills jacobian, eigenvalues and stability for a fixed point.
EquilibriumReport analyze_point(EquilibriumLabel label, const PopulationState& location,
                                const GameParams& p, double tol = 1e-9);

// The four corners plus whichever edge equilibria exist; 5, 6 or 7 reports,
// stability not yet filled.
std::vector<EquilibriumReport> enumerate_boundary_equilibria(const GameParams& p);

// Interior roots of f = g = 0, each fully analyzed: the g = 0 relation
// x_i(x_t) = alpha r R_T Sum alpha^k / (lambda Sum (alpha+x_t)^k) is
// substituted into f, which is scanned at resolution 1e-4 over (0, 1-alpha)
// and bisected at every sign change; roots with x_i outside (0, alpha) are
// discarded. Throws std::runtime_error if a found point has no eigenvalue
// with positive real part (instability consistency check).
std::vector<EquilibriumReport> find_interior_fixed_points(const GameParams& p,
                                                          double tol = 1e-9);
// First interior root (by x_t) or nullopt.
std::optional<EquilibriumReport> find_interior_fixed_point(const GameParams& p,
                                                           double tol = 1e-9);

// Boundary equilibria with stability filled, interior roots appended.
std::vector<EquilibriumReport> equilibrium_reports(const GameParams& p,
                                                   double tol = 1e-9);

}  // namespace trustdyn
