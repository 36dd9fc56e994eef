#include "trustdyn/runner.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "trustdyn/equilibria.hpp"
#include "trustdyn/montecarlo.hpp"
#include "trustdyn/payoffs.hpp"

namespace trustdyn {

using json = nlohmann::ordered_json;

namespace {

constexpr double kZLimit = 5.0;  // mc-check consistency band, in standard errors

std::string params_comment(const GameParams& p) {
  return "# N=" + std::to_string(p.N) + " alpha=" + format_double(p.alpha) +
         " lambda=" + format_double(p.lambda) + " r=" + format_double(p.r) +
         " R_T=" + format_double(p.R_T) + " t_v=" + format_double(p.t_v) +
         " R_U=" + format_double(p.R_U) + "\n";
}

std::string preamble(const char* command, const GameParams& p) {
  return std::string("# command=") + command + "\n" + params_comment(p);
}

json params_json(const GameParams& p) {
  return {{"N", p.N},     {"alpha", p.alpha}, {"lambda", p.lambda}, {"r", p.r},
          {"R_T", p.R_T}, {"t_v", p.t_v},     {"R_U", p.R_U}};
}

json integrator_json(const IntegratorConfig& c) {
  return {{"step", c.step},
          {"t_max", c.t_max},
          {"convergence_eps", c.convergence_eps},
          {"clamp_eps", c.clamp_eps},
          {"sample_stride", c.sample_stride}};
}

json document(const ExperimentConfig& cfg, json options, json results) {
  return {{"command", command_name(cfg.command)},
          {"params", params_json(cfg.params)},
          {"options", std::move(options)},
          {"results", std::move(results)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string stable_set_text(const std::vector<EquilibriumLabel>& set) {
  std::string out;
  for (size_t i = 0; i < set.size(); ++i) {
    if (i) out += "|";
    out += equilibrium_name(set[i]);
  }
  return out;
}

std::vector<LabeledPoint> stable_points(const std::vector<EquilibriumReport>& reports) {
  std::vector<LabeledPoint> out;
  for (const auto& r : reports)
    if (r.stability == Stability::Stable)
      out.push_back({equilibrium_name(r.label), r.location});
  return out;
}

json basin_json(const BasinResult& b) {
  return {{"fraction", b.fraction},
          {"absolute_area", b.absolute_area},
          {"attracted", b.attracted},
          {"resolved", b.resolved},
          {"unresolved", b.unresolved}};
}

std::string basin_row(const BasinResult& b) {
  return format_double(b.fraction) + "," + format_double(b.absolute_area) + "," +
         std::to_string(b.attracted) + "," + std::to_string(b.resolved) + "," +
         std::to_string(b.unresolved) + "\n";
}

}  // namespace

RunOutput run_equilibria(const ExperimentConfig& cfg) {
  const auto reports = equilibrium_reports(cfg.params, cfg.tol);
  const auto verdict = classify_regime(cfg.params, cfg.tol);

  if (cfg.format == OutputFormat::Json) {
    json list = json::array();
    for (const auto& r : reports) {
      const auto& m = r.jacobian;
      list.push_back(
          {{"label", equilibrium_name(r.label)},
           {"x_i", r.location.x_i},
           {"x_t", r.location.x_t},
           {"jacobian", {{m.a11, m.a12}, {m.a21, m.a22}}},
           {"eigenvalues",
            {{r.eigenvalues[0].real(), r.eigenvalues[0].imag()},
             {r.eigenvalues[1].real(), r.eigenvalues[1].imag()}}},
           {"stability", stability_name(r.stability)}});
    }
    json results = {{"case", case_name(verdict.case_id)},
                    {"stable_set", stable_set_text(verdict.stable_set)},
                    {"thresholds",
                     {{"alpha_star", verdict.thresholds.alpha_star},
                      {"lambda_low", verdict.thresholds.lambda_low},
                      {"lambda_high", verdict.thresholds.lambda_high}}},
                    {"equilibria", std::move(list)}};
    return {dump(document(cfg, {{"tol", cfg.tol}}, std::move(results))), 0};
  }

  std::string out = preamble("equilibria", cfg.params);
  out += "# case=" + std::string(case_name(verdict.case_id)) +
         " stable_set=" + stable_set_text(verdict.stable_set) +
         " alpha_star=" + format_double(verdict.thresholds.alpha_star) +
         " lambda_low=" + format_double(verdict.thresholds.lambda_low) +
         " lambda_high=" + format_double(verdict.thresholds.lambda_high) + "\n";
  out += "label,x_i,x_t,j11,j12,j21,j22,eig1_re,eig1_im,eig2_re,eig2_im,stability\n";
  for (const auto& r : reports) {
    const auto& m = r.jacobian;
    out += std::string(equilibrium_name(r.label)) + "," +
           format_double(r.location.x_i) + "," + format_double(r.location.x_t) +
           "," + format_double(m.a11) + "," + format_double(m.a12) + "," +
           format_double(m.a21) + "," + format_double(m.a22) + "," +
           format_double(r.eigenvalues[0].real()) + "," +
           format_double(r.eigenvalues[0].imag()) + "," +
           format_double(r.eigenvalues[1].real()) + "," +
           format_double(r.eigenvalues[1].imag()) + "," +
           stability_name(r.stability) + "\n";
  }
  return {std::move(out), 0};
}

RunOutput run_trajectory(const ExperimentConfig& cfg) {
  if (cfg.trajectory.starts.empty())
    throw std::invalid_argument("trajectory requires at least one start");
  const auto stable = stable_points(equilibrium_reports(cfg.params, cfg.tol));

  std::vector<Trajectory> trajectories;
  trajectories.reserve(cfg.trajectory.starts.size());
  for (const auto& s : cfg.trajectory.starts) {
    Trajectory tr = integrate(s, cfg.params, cfg.integrator);
    tr.terminal_label =
        classify_terminal(tr.terminal, stable, cfg.trajectory.classify_eps);
    trajectories.push_back(std::move(tr));
  }

  if (cfg.format == OutputFormat::Json) {
    json list = json::array();
    for (size_t i = 0; i < trajectories.size(); ++i) {
      const auto& tr = trajectories[i];
      json samples = json::array();
      for (const auto& s : tr.samples)
        samples.push_back({s.t, s.state.x_i, s.state.x_t});
      list.push_back(
          {{"start", {cfg.trajectory.starts[i].x_i, cfg.trajectory.starts[i].x_t}},
           {"terminal", {tr.terminal.x_i, tr.terminal.x_t}},
           {"terminal_label",
            tr.terminal_label ? json(*tr.terminal_label) : json(nullptr)},
           {"converged", tr.converged},
           {"t_end", tr.t_end},
           {"sample_stride", tr.sample_stride},
           {"samples", std::move(samples)}});
    }
    json options = {{"classify_eps", cfg.trajectory.classify_eps},
                    {"integrator", integrator_json(cfg.integrator)}};
    return {dump(document(cfg, std::move(options), std::move(list))), 0};
  }

  std::string out = preamble("trajectory", cfg.params);
  for (size_t i = 0; i < trajectories.size(); ++i) {
    const auto& tr = trajectories[i];
    out += "# start " + std::to_string(i) + ": terminal=" +
           (tr.terminal_label ? *tr.terminal_label : std::string("UNCLASSIFIED")) +
           " x_i=" + format_double(tr.terminal.x_i) +
           " x_t=" + format_double(tr.terminal.x_t) +
           " converged=" + (tr.converged ? "1" : "0") +
           " t_end=" + format_double(tr.t_end) + "\n";
  }
  out += "start_index,t,x_i,x_t,y_i,y_t\n";
  for (size_t i = 0; i < trajectories.size(); ++i) {
    for (const auto& s : trajectories[i].samples) {
      out += std::to_string(i) + "," + format_double(s.t) + "," +
             format_double(s.state.x_i) + "," + format_double(s.state.x_t) + "," +
             format_double(s.state.y_i(cfg.params)) + "," +
             format_double(s.state.y_t(cfg.params)) + "\n";
    }
  }
  return {std::move(out), 0};
}

RunOutput run_phase_portrait(const ExperimentConfig& cfg) {
  const int g = cfg.portrait.grid;
  if (g < 2) throw std::invalid_argument("portrait grid must be at least 2");
  const GameParams& p = cfg.params;

  std::vector<std::array<double, 4>> rows;
  rows.reserve((size_t)g * g);
  for (int i = 0; i < g; ++i) {
    const double x_i = p.alpha * i / (g - 1);
    for (int j = 0; j < g; ++j) {
      const double x_t = (1.0 - p.alpha) * j / (g - 1);
      const VectorField2 v = replicator_rhs({x_i, x_t}, p);
      rows.push_back({x_i, x_t, v.dx_i, v.dx_t});
    }
  }

  if (cfg.format == OutputFormat::Json) {
    json points = json::array();
    for (const auto& r : rows) points.push_back({r[0], r[1], r[2], r[3]});
    json results = {{"columns", {"x_i", "x_t", "dx_i", "dx_t"}},
                    {"points", std::move(points)}};
    return {dump(document(cfg, {{"grid", g}}, std::move(results))), 0};
  }

  std::string out = preamble("phase-portrait", p);
  out += "# grid=" + std::to_string(g) + "\n";
  out += "x_i,x_t,dx_i,dx_t\n";
  for (const auto& r : rows)
    out += format_double(r[0]) + "," + format_double(r[1]) + "," +
           format_double(r[2]) + "," + format_double(r[3]) + "\n";
  return {std::move(out), 0};
}

RunOutput run_regime_map(const ExperimentConfig& cfg) {
  const GameParams& p = cfg.params;
  const RegimeMapResult rm =
      regime_map(cfg.regime.lambda_range, cfg.regime.alpha_range,
                 cfg.regime.lambda_count, cfg.regime.alpha_count, p.N, p.r, p.R_T,
                 p.t_v, cfg.tol);
  const size_t L = rm.lambda_values.size();

  if (cfg.format == OutputFormat::Json) {
    json cases = json::array();
    for (size_t ia = 0; ia < rm.alpha_values.size(); ++ia) {
      json row = json::array();
      for (size_t il = 0; il < L; ++il)
        row.push_back(case_name(rm.verdicts[ia * L + il].case_id));
      cases.push_back(std::move(row));
    }
    json options = {{"lambda_range", {cfg.regime.lambda_range.lo, cfg.regime.lambda_range.hi}},
                    {"alpha_range", {cfg.regime.alpha_range.lo, cfg.regime.alpha_range.hi}},
                    {"lambda_count", cfg.regime.lambda_count},
                    {"alpha_count", cfg.regime.alpha_count},
                    {"tol", cfg.tol}};
    json results = {{"alpha_values", rm.alpha_values},
                    {"lambda_values", rm.lambda_values},
                    {"cases", std::move(cases)}};
    return {dump(document(cfg, std::move(options), std::move(results))), 0};
  }

  std::string out = preamble("regime-map", p);
  out += "# lambda_range=[" + format_double(cfg.regime.lambda_range.lo) + "," +
         format_double(cfg.regime.lambda_range.hi) + "] alpha_range=[" +
         format_double(cfg.regime.alpha_range.lo) + "," +
         format_double(cfg.regime.alpha_range.hi) + "] lambda_count=" +
         std::to_string(cfg.regime.lambda_count) + " alpha_count=" +
         std::to_string(cfg.regime.alpha_count) + "\n";
  out += "alpha,lambda,case,stable_set\n";
  for (size_t ia = 0; ia < rm.alpha_values.size(); ++ia) {
    for (size_t il = 0; il < L; ++il) {
      const RegimeVerdict& v = rm.verdicts[ia * L + il];
      out += format_double(rm.alpha_values[ia]) + "," +
             format_double(rm.lambda_values[il]) + "," + case_name(v.case_id) +
             "," + stable_set_text(v.stable_set) + "\n";
    }
  }
  return {std::move(out), 0};
}

RunOutput run_basin(const ExperimentConfig& cfg) {
  BasinOptions opt;
  opt.capture_eps = cfg.basin.capture_eps;
  opt.threads = cfg.threads;

  if (cfg.basin.axis) {
    const char* axis = sweep_axis_name(*cfg.basin.axis);
    const auto sweep = basin_sweep(*cfg.basin.axis, cfg.basin.values, cfg.params,
                                   cfg.basin.grid_resolution, cfg.integrator, opt);
    if (cfg.format == OutputFormat::Json) {
      json list = json::array();
      for (const auto& [value, b] : sweep) {
        json row = basin_json(b);
        row["value"] = value;
        list.push_back(std::move(row));
      }
      json options = {{"grid_resolution", cfg.basin.grid_resolution},
                      {"capture_eps", cfg.basin.capture_eps},
                      {"sweep_axis", axis},
                      {"threads", cfg.threads},
                      {"integrator", integrator_json(cfg.integrator)}};
      return {dump(document(cfg, std::move(options), std::move(list))), 0};
    }
    std::string out = preamble("basin", cfg.params);
    out += "# grid_resolution=" + std::to_string(cfg.basin.grid_resolution) +
           " capture_eps=" + format_double(cfg.basin.capture_eps) +
           " sweep_axis=" + axis + "\n";
    out += std::string(axis) + ",fraction,absolute_area,attracted,resolved,unresolved\n";
    for (const auto& [value, b] : sweep) out += format_double(value) + "," + basin_row(b);
    return {std::move(out), 0};
  }

  const BasinResult b = basin_fraction(cfg.params, cfg.basin.grid_resolution,
                                       cfg.integrator, opt);
  if (cfg.format == OutputFormat::Json) {
    json options = {{"grid_resolution", cfg.basin.grid_resolution},
                    {"capture_eps", cfg.basin.capture_eps},
                    {"threads", cfg.threads},
                    {"integrator", integrator_json(cfg.integrator)}};
    return {dump(document(cfg, std::move(options), basin_json(b))), 0};
  }
  std::string out = preamble("basin", cfg.params);
  out += "# grid_resolution=" + std::to_string(cfg.basin.grid_resolution) +
         " capture_eps=" + format_double(cfg.basin.capture_eps) + "\n";
  out += "fraction,absolute_area,attracted,resolved,unresolved\n";
  out += basin_row(b);
  return {std::move(out), 0};
}

RunOutput run_mc_check(const ExperimentConfig& cfg) {
  const ExpectedPayoffs closed = expected_payoffs(cfg.mc.state, cfg.params);
  const McExpectedPayoffs mc =
      mc_expected_payoffs(cfg.mc.state, cfg.params, cfg.mc.samples, cfg.seed);

  constexpr Strategy kOrder[] = {Strategy::P, Strategy::M, Strategy::T, Strategy::U};
  bool consistent = true;
  struct Row {
    const char* strategy;
    double closed, mean, std_error, z;
  };
  std::vector<Row> rows;
  for (Strategy s : kOrder) {
    const double c = closed.of(s);
    const McEstimate& e = mc.of(s);
    double z;
    if (e.std_error == 0.0)
      z = (e.mean == c) ? 0.0 : 9e99;  // exact match expected for degenerate draws
    else
      z = (e.mean - c) / e.std_error;
    if (std::abs(z) > kZLimit) consistent = false;
    rows.push_back({strategy_name(s), c, e.mean, e.std_error, z});
  }
  const int exit_code = consistent ? 0 : 3;

  if (cfg.format == OutputFormat::Json) {
    json list = json::array();
    for (const auto& r : rows)
      list.push_back({{"strategy", r.strategy},
                      {"closed_form", r.closed},
                      {"mc_mean", r.mean},
                      {"std_error", r.std_error},
                      {"z", r.z}});
    json options = {{"state", {cfg.mc.state.x_i, cfg.mc.state.x_t}},
                    {"samples", cfg.mc.samples},
                    {"seed", cfg.seed}};
    json results = {{"consistent", consistent}, {"payoffs", std::move(list)}};
    return {dump(document(cfg, std::move(options), std::move(results))), exit_code};
  }

  std::string out = preamble("mc-check", cfg.params);
  out += "# state: x_i=" + format_double(cfg.mc.state.x_i) +
         " x_t=" + format_double(cfg.mc.state.x_t) +
         " samples=" + std::to_string(cfg.mc.samples) +
         " seed=" + std::to_string(cfg.seed) +
         " consistent=" + (consistent ? "1" : "0") + "\n";
  out += "strategy,closed_form,mc_mean,std_error,z\n";
  for (const auto& r : rows)
    out += std::string(r.strategy) + "," + format_double(r.closed) + "," +
           format_double(r.mean) + "," + format_double(r.std_error) + "," +
           format_double(r.z) + "\n";
  return {std::move(out), exit_code};
}

RunOutput run_command(const ExperimentConfig& cfg) {
  switch (cfg.command) {
    case CommandKind::Equilibria: return run_equilibria(cfg);
    case CommandKind::Trajectory: return run_trajectory(cfg);
    case CommandKind::PhasePortrait: return run_phase_portrait(cfg);
    case CommandKind::RegimeMap: return run_regime_map(cfg);
    case CommandKind::Basin: return run_basin(cfg);
    case CommandKind::McCheck: return run_mc_check(cfg);
  }
  throw std::logic_error("unreachable command");
}

}  // namespace trustdyn
