#include "trustdyn/io.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace trustdyn {

using json = nlohmann::json;

CommandKind parse_command(const std::string& name) {
  if (name == "equilibria") return CommandKind::Equilibria;
  if (name == "trajectory") return CommandKind::Trajectory;
  if (name == "phase-portrait") return CommandKind::PhasePortrait;
  if (name == "regime-map") return CommandKind::RegimeMap;
  if (name == "basin") return CommandKind::Basin;
  if (name == "mc-check") return CommandKind::McCheck;
  throw std::invalid_argument("unknown command '" + name + "'");
}

const char* command_name(CommandKind c) {
  switch (c) {
    case CommandKind::Equilibria: return "equilibria";
    case CommandKind::Trajectory: return "trajectory";
    case CommandKind::PhasePortrait: return "phase-portrait";
    case CommandKind::RegimeMap: return "regime-map";
    case CommandKind::Basin: return "basin";
    case CommandKind::McCheck: return "mc-check";
  }
  return "?";
}

std::string format_double(double v) {
  if (v == 0.0) return "0";  // fold the negative zero the edge dynamics produce
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument("config: " + what + " at " + where);
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known) fail(where.empty() ? it.key() : where + "." + it.key(), "unknown key");
  }
}

double get_num(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) fail(where + "." + key, "missing number");
  const json& v = obj.at(key);
  if (!v.is_number()) fail(where + "." + key, "expected a number");
  return v.get<double>();
}

double opt_num(const json& obj, const std::string& where, const char* key,
               double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) fail(where + "." + key, "expected a number");
  return v.get<double>();
}

long long opt_int(const json& obj, const std::string& where, const char* key,
                  long long fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<long long>();
}

std::string opt_str(const json& obj, const std::string& where, const char* key,
                    const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

PopulationState get_state(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    fail(where, "expected a [x_i, x_t] pair");
  return {v[0].get<double>(), v[1].get<double>()};
}

AxisRange get_range(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) fail(where + "." + key, "missing range");
  const json& v = obj.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    fail(where + "." + key, "expected a [lo, hi] pair");
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config: expected a JSON object");
  check_keys(doc, "", {"command", "params", "integrator", "trajectory", "portrait",
                       "regime_map", "basin", "mc_check", "tol", "seed", "threads",
                       "output"});

  ExperimentConfig cfg;
  if (doc.contains("command"))
    cfg.command = parse_command(opt_str(doc, "", "command", ""));

  if (!doc.contains("params") || !doc.at("params").is_object())
    throw std::invalid_argument("config: missing params object");
  const json& jp = doc.at("params");
  check_keys(jp, "params", {"N", "alpha", "lambda", "r", "R_T", "t_v"});
  cfg.params = validate_params((int)opt_int(jp, "params", "N", 0),
                               get_num(jp, "params", "alpha"),
                               get_num(jp, "params", "lambda"),
                               get_num(jp, "params", "r"),
                               get_num(jp, "params", "R_T"),
                               get_num(jp, "params", "t_v"));

  if (doc.contains("integrator")) {
    const json& ji = doc.at("integrator");
    check_keys(ji, "integrator",
               {"step", "t_max", "convergence_eps", "clamp_eps", "sample_stride"});
    cfg.integrator.step = opt_num(ji, "integrator", "step", cfg.integrator.step);
    cfg.integrator.t_max = opt_num(ji, "integrator", "t_max", cfg.integrator.t_max);
    cfg.integrator.convergence_eps =
        opt_num(ji, "integrator", "convergence_eps", cfg.integrator.convergence_eps);
    cfg.integrator.clamp_eps =
        opt_num(ji, "integrator", "clamp_eps", cfg.integrator.clamp_eps);
    cfg.integrator.sample_stride =
        (int)opt_int(ji, "integrator", "sample_stride", cfg.integrator.sample_stride);
  }

  if (doc.contains("trajectory")) {
    const json& jt = doc.at("trajectory");
    check_keys(jt, "trajectory", {"starts", "classify_eps"});
    if (jt.contains("starts")) {
      const json& js = jt.at("starts");
      if (!js.is_array()) fail("trajectory.starts", "expected an array");
      for (size_t i = 0; i < js.size(); ++i) {
        const std::string where = "trajectory.starts[" + std::to_string(i) + "]";
        const PopulationState s = get_state(js[i], where);
        if (!state_in_rectangle(s, cfg.params))
          fail(where, "start outside the state rectangle");
        cfg.trajectory.starts.push_back(s);
      }
    }
    cfg.trajectory.classify_eps =
        opt_num(jt, "trajectory", "classify_eps", cfg.trajectory.classify_eps);
  }

  if (doc.contains("portrait")) {
    const json& jo = doc.at("portrait");
    check_keys(jo, "portrait", {"grid"});
    cfg.portrait.grid = (int)opt_int(jo, "portrait", "grid", cfg.portrait.grid);
    if (cfg.portrait.grid < 2) fail("portrait.grid", "expected at least 2");
  }

  if (doc.contains("regime_map")) {
    const json& jr = doc.at("regime_map");
    check_keys(jr, "regime_map",
               {"lambda_range", "alpha_range", "lambda_count", "alpha_count"});
    cfg.regime.lambda_range = get_range(jr, "regime_map", "lambda_range");
    cfg.regime.alpha_range = get_range(jr, "regime_map", "alpha_range");
    cfg.regime.lambda_count =
        (int)opt_int(jr, "regime_map", "lambda_count", cfg.regime.lambda_count);
    cfg.regime.alpha_count =
        (int)opt_int(jr, "regime_map", "alpha_count", cfg.regime.alpha_count);
  }

  if (doc.contains("basin")) {
    const json& jb = doc.at("basin");
    check_keys(jb, "basin", {"grid_resolution", "capture_eps", "sweep"});
    cfg.basin.grid_resolution =
        (int)opt_int(jb, "basin", "grid_resolution", cfg.basin.grid_resolution);
    cfg.basin.capture_eps = opt_num(jb, "basin", "capture_eps", cfg.basin.capture_eps);
    if (jb.contains("sweep")) {
      const json& jsw = jb.at("sweep");
      check_keys(jsw, "basin.sweep", {"axis", "values"});
      const std::string axis = opt_str(jsw, "basin.sweep", "axis", "");
      if (axis == "alpha")
        cfg.basin.axis = SweepAxis::Alpha;
      else if (axis == "lambda")
        cfg.basin.axis = SweepAxis::Lambda;
      else
        fail("basin.sweep.axis", "expected \"alpha\" or \"lambda\"");
      if (!jsw.contains("values") || !jsw.at("values").is_array())
        fail("basin.sweep.values", "expected an array");
      for (const auto& v : jsw.at("values")) {
        if (!v.is_number()) fail("basin.sweep.values", "expected numbers");
        cfg.basin.values.push_back(v.get<double>());
      }
    }
  }

  if (doc.contains("mc_check")) {
    const json& jm = doc.at("mc_check");
    check_keys(jm, "mc_check", {"state", "samples"});
    if (!jm.contains("state")) fail("mc_check.state", "missing state");
    cfg.mc.state = get_state(jm.at("state"), "mc_check.state");
    if (!state_in_rectangle(cfg.mc.state, cfg.params))
      fail("mc_check.state", "state outside the state rectangle");
    cfg.mc.samples = opt_int(jm, "mc_check", "samples", cfg.mc.samples);
    if (cfg.mc.samples < 1) fail("mc_check.samples", "expected at least 1");
  }

  cfg.tol = opt_num(doc, "", "tol", cfg.tol);
  cfg.seed = (std::uint64_t)opt_int(doc, "", "seed", (long long)cfg.seed);
  cfg.threads = (int)opt_int(doc, "", "threads", cfg.threads);

  if (doc.contains("output")) {
    const json& jo = doc.at("output");
    check_keys(jo, "output", {"path", "format"});
    cfg.out_path = opt_str(jo, "output", "path", "");
    const std::string fmt = opt_str(jo, "output", "format", "csv");
    if (fmt == "csv")
      cfg.format = OutputFormat::Csv;
    else if (fmt == "json")
      cfg.format = OutputFormat::Json;
    else
      fail("output.format", "expected \"csv\" or \"json\"");
  }
  return cfg;
}

std::string apply_override(const std::string& json_text,
                           const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw std::invalid_argument("override must look like key.path=value: " + assignment);
  const std::string path = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);

  json value;
  try {
    value = json::parse(raw);
  } catch (const json::exception&) {
    value = raw;  // unquoted strings pass through verbatim
  }

  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }

  json* node = &doc;
  size_t pos = 0;
  while (true) {
    const size_t dot = path.find('.', pos);
    const std::string key = path.substr(pos, dot == std::string::npos
                                                 ? std::string::npos
                                                 : dot - pos);
    if (key.empty())
      throw std::invalid_argument("override has an empty path segment: " + assignment);
    if (dot == std::string::npos) {
      (*node)[key] = value;
      break;
    }
    if (!node->contains(key) || !(*node)[key].is_object()) (*node)[key] = json::object();
    node = &(*node)[key];
    pos = dot + 1;
  }
  return doc.dump(2) + "\n";
}

}  // namespace trustdyn
