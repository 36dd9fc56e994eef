// trustdyn: equilibria, trajectories, regime maps and basins of the
// N-player trust game with punishing investors.
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trustdyn/io.hpp"
#include "trustdyn/runner.hpp"

namespace {

struct CliArgs {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_path;
  std::string format;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = 0;
  bool threads_set = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& body) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << body;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

int env_threads() {
  const char* v = std::getenv("TRUSTDYN_THREADS");
  if (!v || !*v) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n < 1)
    throw std::runtime_error("TRUSTDYN_THREADS must be a positive integer");
  return (int)n;
}

int run(trustdyn::CommandKind command, const CliArgs& args) {
  using namespace trustdyn;

  std::string text = read_file(args.config_path);
  for (const auto& assignment : args.overrides)
    text = apply_override(text, assignment);

  ExperimentConfig cfg = parse_config(text);
  cfg.command = command;  // the subcommand wins over any config "command" key

  if (!args.out_path.empty()) cfg.out_path = args.out_path;
  if (cfg.out_path.empty())
    throw std::runtime_error("no output path: pass --out or set output.path");
  if (!args.format.empty())
    cfg.format = args.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (args.seed_set) cfg.seed = args.seed;
  if (args.threads_set)
    cfg.threads = args.threads;
  else if (cfg.threads <= 0)
    cfg.threads = env_threads();
  if (cfg.threads <= 0) cfg.threads = 1;

  const RunOutput out = run_command(cfg);
  write_file(cfg.out_path, out.text);
  std::cout << command_name(command) << ": wrote " << cfg.out_path << " ("
            << out.text.size() << " bytes)\n";
  if (out.exit_code != 0)
    std::cerr << command_name(command) << ": consistency check failed\n";
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"N-player trust game dynamics"};
  app.require_subcommand(1);

  static const std::vector<std::pair<std::string, std::string>> kCommands = {
      {"equilibria", "enumerate fixed points with stability"},
      {"trajectory", "integrate the replicator flow from given starts"},
      {"phase-portrait", "sample the vector field on a grid"},
      {"regime-map", "classify the lambda-alpha plane into the six cases"},
      {"basin", "estimate the basin of the sanctioned-trust point"},
      {"mc-check", "compare closed-form payoffs against Monte-Carlo means"},
  };

  CliArgs args;
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", args.config_path, "JSON experiment config")
        ->required();
    sub->add_option("--set", args.overrides,
                    "dotted-path override, e.g. params.lambda=0.3 (repeatable)");
    sub->add_option("--out", args.out_path, "output file path");
    sub->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", args.seed, "RNG seed (mc-check)")
        ->each([&](const std::string&) { args.seed_set = true; });
    sub->add_option("--threads", args.threads, "worker threads (basin)")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { args.threads_set = true; });
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (size_t i = 0; i < subs.size(); ++i)
      if (subs[i]->parsed())
        return run(trustdyn::parse_command(kCommands[i].first), args);
    std::cerr << "trustdyn: no subcommand\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "trustdyn: error: " << e.what() << "\n";
    return 1;
  }
}
