#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "trustdyn/basins.hpp"
#include "trustdyn/dynamics.hpp"
#include "trustdyn/equilibria.hpp"
#include "trustdyn/montecarlo.hpp"
#include "trustdyn/payoffs.hpp"
#include "trustdyn/regimes.hpp"

namespace py = pybind11;
using namespace trustdyn;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reduced replicator dynamics of the N-player trust game with "
            "punishing investors";

  py::enum_<Strategy>(m, "Strategy")
      .value("P", Strategy::P)
      .value("M", Strategy::M)
      .value("T", Strategy::T)
      .value("U", Strategy::U);

  py::enum_<EquilibriumLabel>(m, "EquilibriumLabel")
      .value("MU", EquilibriumLabel::MU)
      .value("MT", EquilibriumLabel::MT)
      .value("PU", EquilibriumLabel::PU)
      .value("PT", EquilibriumLabel::PT)
      .value("PTU", EquilibriumLabel::PTU)
      .value("PMU", EquilibriumLabel::PMU)
      .value("PMT", EquilibriumLabel::PMT)
      .value("INTERIOR", EquilibriumLabel::Interior);

  py::enum_<Stability>(m, "Stability")
      .value("STABLE", Stability::Stable)
      .value("UNSTABLE", Stability::Unstable)
      .value("MARGINAL", Stability::Marginal);

  py::enum_<CaseId>(m, "CaseId")
      .value("CASE1", CaseId::Case1)
      .value("CASE2", CaseId::Case2)
      .value("CASE3", CaseId::Case3)
      .value("CASE4", CaseId::Case4)
      .value("CASE5", CaseId::Case5)
      .value("CASE6", CaseId::Case6)
      .value("BOUNDARY", CaseId::Boundary);

  py::enum_<SweepAxis>(m, "SweepAxis")
      .value("ALPHA", SweepAxis::Alpha)
      .value("LAMBDA", SweepAxis::Lambda);

  py::class_<GameParams>(m, "GameParams")
      .def_readonly("N", &GameParams::N)
      .def_readonly("alpha", &GameParams::alpha)
      .def_readonly("lambda_", &GameParams::lambda)
      .def_readonly("r", &GameParams::r)
      .def_readonly("R_T", &GameParams::R_T)
      .def_readonly("t_v", &GameParams::t_v)
      .def_readonly("R_U", &GameParams::R_U)
      .def("__repr__", [](const GameParams& p) {
        std::ostringstream s;
        s << "GameParams(N=" << p.N << ", alpha=" << p.alpha
          << ", lambda_=" << p.lambda << ", r=" << p.r << ", R_T=" << p.R_T
          << ", t_v=" << p.t_v << ")";
        return s.str();
      });

  py::class_<PopulationState>(m, "PopulationState")
      .def(py::init([](double x_i, double x_t) {
             return PopulationState{x_i, x_t};
           }),
           py::arg("x_i"), py::arg("x_t"))
      .def_readwrite("x_i", &PopulationState::x_i)
      .def_readwrite("x_t", &PopulationState::x_t)
      .def("y_i", &PopulationState::y_i, py::arg("params"))
      .def("y_t", &PopulationState::y_t, py::arg("params"))
      .def("__repr__", [](const PopulationState& s) {
        std::ostringstream o;
        o << "PopulationState(x_i=" << s.x_i << ", x_t=" << s.x_t << ")";
        return o.str();
      });

  py::class_<GroupComposition>(m, "GroupComposition")
      .def(py::init([](int N_P, int N_M, int N_T, int N_U) {
             return GroupComposition{N_P, N_M, N_T, N_U};
           }),
           py::arg("N_P"), py::arg("N_M"), py::arg("N_T"), py::arg("N_U"))
      .def_readwrite("N_P", &GroupComposition::N_P)
      .def_readwrite("N_M", &GroupComposition::N_M)
      .def_readwrite("N_T", &GroupComposition::N_T)
      .def_readwrite("N_U", &GroupComposition::N_U)
      .def("total", &GroupComposition::total);

  py::class_<ExpectedPayoffs>(m, "ExpectedPayoffs")
      .def_readonly("f_P", &ExpectedPayoffs::f_P)
      .def_readonly("f_M", &ExpectedPayoffs::f_M)
      .def_readonly("f_T", &ExpectedPayoffs::f_T)
      .def_readonly("f_U", &ExpectedPayoffs::f_U)
      .def("of", &ExpectedPayoffs::of, py::arg("strategy"))
      .def("phi_i", &ExpectedPayoffs::phi_i, py::arg("state"), py::arg("params"))
      .def("phi_t", &ExpectedPayoffs::phi_t, py::arg("state"), py::arg("params"));

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("mean", &McEstimate::mean)
      .def_readonly("std_error", &McEstimate::std_error);

  py::class_<McExpectedPayoffs>(m, "McExpectedPayoffs")
      .def_readonly("P", &McExpectedPayoffs::P)
      .def_readonly("M", &McExpectedPayoffs::M)
      .def_readonly("T", &McExpectedPayoffs::T)
      .def_readonly("U", &McExpectedPayoffs::U)
      .def("of", &McExpectedPayoffs::of, py::arg("strategy"),
           py::return_value_policy::copy);

  py::class_<VectorField2>(m, "VectorField2")
      .def_readonly("dx_i", &VectorField2::dx_i)
      .def_readonly("dx_t", &VectorField2::dx_t)
      .def("__repr__", [](const VectorField2& v) {
        std::ostringstream o;
        o << "VectorField2(dx_i=" << v.dx_i << ", dx_t=" << v.dx_t << ")";
        return o.str();
      });

  py::class_<IntegratorConfig>(m, "IntegratorConfig")
      .def(py::init([](double step, double t_max, double convergence_eps,
                       double clamp_eps, int sample_stride) {
             IntegratorConfig c;
             c.step = step;
             c.t_max = t_max;
             c.convergence_eps = convergence_eps;
             c.clamp_eps = clamp_eps;
             c.sample_stride = sample_stride;
             return c;
           }),
           py::arg("step") = 0.01, py::arg("t_max") = 1e6,
           py::arg("convergence_eps") = 1e-10, py::arg("clamp_eps") = 1e-12,
           py::arg("sample_stride") = 0)
      .def_readwrite("step", &IntegratorConfig::step)
      .def_readwrite("t_max", &IntegratorConfig::t_max)
      .def_readwrite("convergence_eps", &IntegratorConfig::convergence_eps)
      .def_readwrite("clamp_eps", &IntegratorConfig::clamp_eps)
      .def_readwrite("sample_stride", &IntegratorConfig::sample_stride);

  py::class_<TrajectorySample>(m, "TrajectorySample")
      .def_readonly("t", &TrajectorySample::t)
      .def_readonly("state", &TrajectorySample::state);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("samples", &Trajectory::samples)
      .def_readonly("terminal", &Trajectory::terminal)
      .def_readonly("converged", &Trajectory::converged)
      .def_readonly("t_end", &Trajectory::t_end)
      .def_readonly("sample_stride", &Trajectory::sample_stride)
      .def_readonly("terminal_label", &Trajectory::terminal_label);

  py::class_<Matrix2>(m, "Matrix2")
      .def_readonly("a11", &Matrix2::a11)
      .def_readonly("a12", &Matrix2::a12)
      .def_readonly("a21", &Matrix2::a21)
      .def_readonly("a22", &Matrix2::a22)
      .def("rows", [](const Matrix2& m2) {
        return std::vector<std::vector<double>>{{m2.a11, m2.a12},
                                                {m2.a21, m2.a22}};
      });

  py::class_<ThresholdSet>(m, "ThresholdSet")
      .def_readonly("alpha_star", &ThresholdSet::alpha_star)
      .def_readonly("lambda_low", &ThresholdSet::lambda_low)
      .def_readonly("lambda_high", &ThresholdSet::lambda_high);

  py::class_<EquilibriumReport>(m, "EquilibriumReport")
      .def_readonly("label", &EquilibriumReport::label)
      .def_readonly("location", &EquilibriumReport::location)
      .def_readonly("jacobian", &EquilibriumReport::jacobian)
      .def_readonly("eigenvalues", &EquilibriumReport::eigenvalues)
      .def_readonly("stability", &EquilibriumReport::stability)
      .def_readonly("analyzed", &EquilibriumReport::analyzed)
      .def_property_readonly("name", [](const EquilibriumReport& r) {
        return std::string(equilibrium_name(r.label));
      });

  py::class_<RegimeVerdict>(m, "RegimeVerdict")
      .def_readonly("case_id", &RegimeVerdict::case_id)
      .def_readonly("stable_set", &RegimeVerdict::stable_set)
      .def_readonly("thresholds", &RegimeVerdict::thresholds)
      .def_property_readonly("case_name", [](const RegimeVerdict& v) {
        return std::string(case_name(v.case_id));
      });

  py::class_<RegimeMapResult>(m, "RegimeMapResult")
      .def_readonly("alpha_values", &RegimeMapResult::alpha_values)
      .def_readonly("lambda_values", &RegimeMapResult::lambda_values)
      .def_readonly("verdicts", &RegimeMapResult::verdicts);

  py::class_<BasinResult>(m, "BasinResult")
      .def_readonly("fraction", &BasinResult::fraction)
      .def_readonly("absolute_area", &BasinResult::absolute_area)
      .def_readonly("grid_resolution", &BasinResult::grid_resolution)
      .def_readonly("attracted", &BasinResult::attracted)
      .def_readonly("resolved", &BasinResult::resolved)
      .def_readonly("unresolved", &BasinResult::unresolved);

  py::class_<BasinOptions>(m, "BasinOptions")
      .def(py::init([](double capture_eps, double unresolved_budget,
                       int threads) {
             BasinOptions o;
             o.capture_eps = capture_eps;
             o.unresolved_budget = unresolved_budget;
             o.threads = threads;
             return o;
           }),
           py::arg("capture_eps") = 1e-3, py::arg("unresolved_budget") = 0.01,
           py::arg("threads") = 1)
      .def_readwrite("capture_eps", &BasinOptions::capture_eps)
      .def_readwrite("unresolved_budget", &BasinOptions::unresolved_budget)
      .def_readwrite("threads", &BasinOptions::threads);

  m.def("validate_params", &validate_params, py::arg("N"), py::arg("alpha"),
        py::arg("lambda_"), py::arg("r"), py::arg("R_T"), py::arg("t_v") = 1.0,
        "Validate raw inputs against the model constraints; fills in R_U.");
  m.def("state_in_rectangle", &state_in_rectangle, py::arg("state"),
        py::arg("params"), py::arg("slack") = 0.0);
  m.def("group_payoff", &group_payoff, py::arg("focal"), py::arg("composition"),
        py::arg("params"));
  m.def("expected_payoffs", &expected_payoffs, py::arg("state"),
        py::arg("params"));
  m.def("payoff_difference_f", &payoff_difference_f, py::arg("x_i"),
        py::arg("x_t"), py::arg("params"));
  m.def("payoff_difference_g", &payoff_difference_g, py::arg("x_i"),
        py::arg("x_t"), py::arg("params"));
  m.def("mc_expected_payoffs", &mc_expected_payoffs, py::arg("state"),
        py::arg("params"), py::arg("samples"), py::arg("seed"));
  m.def("replicator_rhs", &replicator_rhs, py::arg("state"), py::arg("params"));
  m.def("replicator_rhs_from_payoffs", &replicator_rhs_from_payoffs,
        py::arg("state"), py::arg("params"));
  m.def("integrate", &integrate, py::arg("start"), py::arg("params"),
        py::arg("config") = IntegratorConfig{});
  m.def("alpha_star", &alpha_star, py::arg("N"));
  m.def("thresholds", &thresholds, py::arg("params"));
  m.def("jacobian", &jacobian, py::arg("location"), py::arg("params"));
  m.def("equilibrium_reports", &equilibrium_reports, py::arg("params"),
        py::arg("tol") = 1e-9);
  m.def("find_interior_fixed_points", &find_interior_fixed_points,
        py::arg("params"), py::arg("tol") = 1e-9);
  m.def("classify_regime", &classify_regime, py::arg("params"),
        py::arg("tol") = 1e-9);
  m.def("regime_map",
        [](std::pair<double, double> lambda_range,
           std::pair<double, double> alpha_range, int lambda_count,
           int alpha_count, int N, double r, double R_T, double t_v,
           double tol) {
          return regime_map({lambda_range.first, lambda_range.second},
                            {alpha_range.first, alpha_range.second},
                            lambda_count, alpha_count, N, r, R_T, t_v, tol);
        },
        py::arg("lambda_range"), py::arg("alpha_range"),
        py::arg("lambda_count"), py::arg("alpha_count"), py::arg("N"),
        py::arg("r"), py::arg("R_T"), py::arg("t_v") = 1.0,
        py::arg("tol") = 1e-9);
  m.def("basin_fraction", &basin_fraction, py::arg("params"),
        py::arg("grid_resolution"), py::arg("config"),
        py::arg("options") = BasinOptions{},
        py::call_guard<py::gil_scoped_release>());
  m.def("basin_sweep", &basin_sweep, py::arg("axis"), py::arg("values"),
        py::arg("base"), py::arg("grid_resolution"), py::arg("config"),
        py::arg("options") = BasinOptions{},
        py::call_guard<py::gil_scoped_release>());
}
