#include <cmath>
#include <set>
#include <string>

#include <doctest.h>

#include "support.hpp"
#include "trustdyn/dynamics.hpp"
#include "trustdyn/equilibria.hpp"

using namespace trustdyn;

namespace {

// Central finite difference of the full vector field, for Jacobian checks.
Matrix2 fd_jacobian(const PopulationState& at, const GameParams& p) {
  const double h = 1e-6;
  const VectorField2 xp = replicator_rhs({at.x_i + h, at.x_t}, p);
  const VectorField2 xm = replicator_rhs({at.x_i - h, at.x_t}, p);
  const VectorField2 tp = replicator_rhs({at.x_i, at.x_t + h}, p);
  const VectorField2 tm = replicator_rhs({at.x_i, at.x_t - h}, p);
  return {(xp.dx_i - xm.dx_i) / (2 * h), (tp.dx_i - tm.dx_i) / (2 * h),
          (xp.dx_t - xm.dx_t) / (2 * h), (tp.dx_t - tm.dx_t) / (2 * h)};
}

std::set<std::string> labels_of(const std::vector<EquilibriumReport>& reports,
                                bool only_stable = false) {
  std::set<std::string> out;
  for (const auto& r : reports)
    if (!only_stable || r.stability == Stability::Stable)
      out.insert(equilibrium_name(r.label));
  return out;
}

}  // namespace

TEST_SUITE("equilibria") {

TEST_CASE("alpha_star solves its defining equation") {
  CHECK(alpha_star(3) == 1.0);
  CHECK(std::fabs(alpha_star(7) - 0.1666845393874040075044487) < 1e-11);
  CHECK(std::fabs(alpha_star(10) - 0.1111111134054891301428302) < 1e-11);
  CHECK(std::fabs(alpha_star(20) - 0.05263157894736842105263206) < 1e-11);
  for (int N = 4; N <= 24; ++N) {
    const double a = alpha_star(N);
    CHECK(a > 0.0);
    CHECK(a < 1.0);
    CHECK(std::fabs((N - 1) * a - (N - 2) * pow_int(a, N - 1) - 1.0) < 1e-10);
  }
}

TEST_CASE("thresholds against pinned values") {
  CHECK(rel_close(thresholds(tsup::fig2()).lambda_low, 0.012345679, 1e-14));
  CHECK(rel_close(thresholds(tsup::fig5()).lambda_low,
                  0.01388888177777777777777778, 1e-14));
  CHECK(rel_close(thresholds(tsup::fig7()).lambda_low,
                  0.005847953216374269005263158, 1e-14));
  CHECK(rel_close(thresholds(tsup::fig9a()).lambda_low, 0.04921875, 1e-15));
  CHECK(rel_close(thresholds(tsup::fig10()).lambda_low,
                  0.05847953216374269005263158, 1e-14));
  CHECK(thresholds(tsup::fig2()).lambda_high == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(thresholds(tsup::fig10()).lambda_high == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("phi3 exceeds phi2 by exactly the corner gap") {
  tsup::Sampler rng(401);
  for (int i = 0; i < 100; ++i) {
    const GameParams p = rng.params();
    const double gap = 1.0 - pow_int(p.alpha, p.N - 1);
    for (int k = 0; k < 10; ++k) {
      const double x = p.alpha * rng.uniform();
      CHECK(rel_close(phi3(x, p) - phi2(x, p), gap, 1e-12));
    }
  }
}

TEST_CASE("edge roots against pinned values") {
  CHECK(std::fabs(*root_phi2(tsup::fig3()) - 0.1640348752494771353529081) < 1e-11);
  CHECK(std::fabs(*root_phi2(tsup::fig7()) - 0.08108120654573756944460235) < 1e-11);
  CHECK(std::fabs(*root_phi2(tsup::fig9a()) - 0.3665769122484692501397146) < 1e-11);
  CHECK(std::fabs(*root_phi1(tsup::fig4()) - 0.4521463486205010805587305) < 1e-11);
  CHECK(std::fabs(*root_phi1(tsup::fig5()) - 0.4042983544614408308225212) < 1e-11);
  CHECK(std::fabs(*root_phi1(tsup::fig9a()) - 0.03733700477711241677766569) < 1e-11);
  CHECK(std::fabs(*root_phi1(tsup::fig10()) - 0.4500052502790091892430052) < 1e-11);
}

TEST_CASE("the upper-edge root always exists and sits at half the investor fraction") {
  // both divided-difference terms of phi3 telescope at x = alpha/2, so the
  // root is alpha/2 identically in every parameter regime
  tsup::Sampler rng(402);
  for (int i = 0; i < 100; ++i) {
    const GameParams p = rng.params();
    CHECK(std::fabs(root_phi3(p) - p.alpha / 2) < 1e-11);
    CHECK(std::fabs(phi3(p.alpha / 2, p)) < 1e-12);
  }
  CHECK(std::fabs(root_phi3(tsup::fig2()) - 0.05) < 1e-11);
  CHECK(std::fabs(root_phi3(tsup::fig5()) - 0.1) < 1e-11);
  CHECK(std::fabs(root_phi3(tsup::fig9a()) - 0.25) < 1e-11);
}

TEST_CASE("root existence tracks the thresholds") {
  tsup::Sampler rng(403);
  for (int i = 0; i < 100; ++i) {
    const GameParams p = rng.params(4, 20);
    const ThresholdSet th = thresholds(p);
    CHECK(root_phi1(p).has_value() ==
          (th.lambda_low < p.lambda && p.lambda < th.lambda_high));
    CHECK(root_phi2(p).has_value() == (p.alpha > th.alpha_star));
  }
}

TEST_CASE("analytic jacobian matches finite differences everywhere") {
  tsup::Sampler rng(404);
  for (const GameParams& p : tsup::figure_sets()) {
    // corners, edge midpoints, and random interior points
    std::vector<PopulationState> pts = {
        {0.0, 0.0},           {p.alpha, 0.0},
        {0.0, 1 - p.alpha},   {p.alpha, 1 - p.alpha},
        {p.alpha / 2, 0.0},   {p.alpha / 2, 1 - p.alpha},
        {0.0, (1 - p.alpha) / 2}, {p.alpha, (1 - p.alpha) / 2}};
    for (int i = 0; i < 20; ++i) pts.push_back(rng.state(p));
    for (const auto& at : pts) {
      const Matrix2 an = jacobian(at, p);
      const Matrix2 fd = fd_jacobian(at, p);
      CHECK(std::fabs(an.a11 - fd.a11) < 1e-6);
      CHECK(std::fabs(an.a12 - fd.a12) < 1e-6);
      CHECK(std::fabs(an.a21 - fd.a21) < 1e-6);
      CHECK(std::fabs(an.a22 - fd.a22) < 1e-6);
    }
  }
}

TEST_CASE("corner jacobian of the defect corner against pinned values") {
  const Matrix2 j = jacobian({0.0, 0.0}, tsup::fig2());
  CHECK(rel_close(j.a11, -0.01612579509, 1e-12));
  CHECK(rel_close(j.a22, -0.0111111111, 1e-12));
  CHECK(j.a12 == 0.0);
  CHECK(j.a21 == 0.0);
}

TEST_CASE("stability classification bands around zero") {
  using C = std::complex<double>;
  CHECK(classify_stability({C(-1, 0), C(-2, 0)}) == Stability::Stable);
  CHECK(classify_stability({C(-1, 0), C(1e-12, 0)}) == Stability::Marginal);
  CHECK(classify_stability({C(-1, 0), C(1e-6, 0)}) == Stability::Unstable);
  CHECK(classify_stability({C(-0.1, 2), C(-0.1, -2)}) == Stability::Stable);
  CHECK(classify_stability({C(0.1, 2), C(0.1, -2)}) == Stability::Unstable);
}

TEST_CASE("boundary equilibrium counts follow the six reference cases") {
  const int expected_counts[] = {5, 6, 6, 7, 5, 6};
  const auto sets = tsup::figure_sets();
  for (size_t k = 0; k < sets.size(); ++k) {
    CHECK_MESSAGE(enumerate_boundary_equilibria(sets[k]).size() ==
                      (size_t)expected_counts[k],
                  "figure set ", k);
  }
  // exact label sets
  CHECK(labels_of(enumerate_boundary_equilibria(tsup::fig2())) ==
        std::set<std::string>{"M+U", "M+T", "P+U", "P+T", "P+M+T"});
  CHECK(labels_of(enumerate_boundary_equilibria(tsup::fig5())) ==
        std::set<std::string>{"M+U", "M+T", "P+U", "P+T", "P+T+U", "P+M+U",
                              "P+M+T"});
  CHECK(labels_of(enumerate_boundary_equilibria(tsup::fig4())) ==
        std::set<std::string>{"M+U", "M+T", "P+U", "P+T", "P+T+U", "P+M+T"});
}

TEST_CASE("stable sets follow the six reference cases") {
  using S = std::set<std::string>;
  CHECK(labels_of(equilibrium_reports(tsup::fig2()), true) == S{"M+U"});
  CHECK(labels_of(equilibrium_reports(tsup::fig3()), true) == S{"M+U", "P+U"});
  CHECK(labels_of(equilibrium_reports(tsup::fig4()), true) == S{"M+U", "P+T"});
  CHECK(labels_of(equilibrium_reports(tsup::fig5()), true) ==
        S{"M+U", "P+U", "P+T"});
  CHECK(labels_of(equilibrium_reports(tsup::fig6()), true) == S{"M+U", "P+T"});
  CHECK(labels_of(equilibrium_reports(tsup::fig7()), true) == S{"M+U", "P+T"});
}

TEST_CASE("the coexistence interior point exists only with all three attractors") {
  CHECK(find_interior_fixed_points(tsup::fig2()).empty());
  CHECK(find_interior_fixed_points(tsup::fig4()).empty());

  const auto interior = find_interior_fixed_points(tsup::fig5());
  REQUIRE(interior.size() == 1);
  const EquilibriumReport& r = interior.front();
  CHECK(r.label == EquilibriumLabel::Interior);
  CHECK(std::fabs(r.location.x_i - 0.1622908354160142766033514) < 1e-10);
  CHECK(std::fabs(r.location.x_t - 0.4863954133317197734708926) < 1e-10);
  CHECK(std::fabs(r.jacobian.a11 - 0.02948264480751918145209964) < 1e-9);
  CHECK(std::fabs(r.jacobian.a12 - 0.0006784508756218202138176317) < 1e-9);
  CHECK(std::fabs(r.jacobian.a21 - 0.02937160508514829326278966) < 1e-9);
  CHECK(std::fabs(r.jacobian.a22 - 0.01301208234455114095220928) < 1e-9);
  CHECK(std::fabs(r.eigenvalues[0].real() - 0.01188002413785581614253823) < 1e-9);
  CHECK(std::fabs(r.eigenvalues[1].real() - 0.0306147030142145062617707) < 1e-9);
  CHECK(r.stability == Stability::Unstable);

  // residuals of the defining equations at the reported point
  const GameParams p = tsup::fig5();
  CHECK(std::fabs(payoff_difference_f(r.location.x_i, r.location.x_t, p)) < 1e-10);
  CHECK(std::fabs(payoff_difference_g(r.location.x_i, r.location.x_t, p)) < 1e-10);
}

TEST_CASE("every interior fixed point in random parameter space is unstable") {
  tsup::Sampler rng(405);
  for (int i = 0; i < 30; ++i) {
    const GameParams p = rng.params(4, 14);
    for (const auto& r : find_interior_fixed_points(p)) {
      CHECK(r.stability != Stability::Stable);
      CHECK(r.eigenvalues[1].real() > 0.0);
    }
  }
}

TEST_CASE("full reports carry analyzed jacobians for every point") {
  for (const auto& r : equilibrium_reports(tsup::fig5())) {
    CHECK(r.analyzed);
    const auto ev = eigenvalues(r.jacobian);
    CHECK(ev[0] == r.eigenvalues[0]);
    CHECK(ev[1] == r.eigenvalues[1]);
    CHECK(classify_stability(r.eigenvalues) == r.stability);
  }
}

}  // TEST_SUITE
