// Acceptance harness: one criterion per invocation, one PASS/FAIL line.
//   acceptance <criterion 1..7> <configs-dir> <cli-binary>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "trustdyn/basins.hpp"
#include "trustdyn/dynamics.hpp"
#include "trustdyn/equilibria.hpp"
#include "trustdyn/io.hpp"
#include "trustdyn/montecarlo.hpp"
#include "trustdyn/payoffs.hpp"
#include "trustdyn/regimes.hpp"

using namespace trustdyn;

namespace {

std::string g_configs_dir;
std::string g_cli_binary;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ExperimentConfig load_config(const std::string& name) {
  return parse_config(read_file(g_configs_dir + "/" + name));
}

std::set<std::string> stable_labels(const GameParams& p) {
  std::set<std::string> out;
  for (const auto& r : equilibrium_reports(p))
    if (r.stability == Stability::Stable) out.insert(equilibrium_name(r.label));
  return out;
}

// 1. The six reference parameter sets reproduce their boundary-equilibrium
//    counts {5,6,6,7,5,6} and stable sets.
bool criterion_case_reproduction(std::string& why) {
  const auto sets = tsup::figure_sets();
  const size_t counts[] = {5, 6, 6, 7, 5, 6};
  const std::set<std::string> stable[] = {
      {"M+U"},        {"M+U", "P+U"}, {"M+U", "P+T"},
      {"M+U", "P+U", "P+T"}, {"M+U", "P+T"}, {"M+U", "P+T"}};
  for (size_t k = 0; k < sets.size(); ++k) {
    const size_t n = enumerate_boundary_equilibria(sets[k]).size();
    if (n != counts[k]) {
      why = "figure set " + std::to_string(k + 2) + ": found " +
            std::to_string(n) + " boundary equilibria, expected " +
            std::to_string(counts[k]);
      return false;
    }
    const auto got = stable_labels(sets[k]);
    if (got != stable[k]) {
      why = "figure set " + std::to_string(k + 2) + ": wrong stable set";
      return false;
    }
  }
  return true;
}

// 2. The coexistence interior point exists with tiny residuals and a positive
//    eigenvalue; no stable interior point exists across 200 random draws.
bool criterion_interior_instability(std::string& why) {
  const GameParams p5 = tsup::fig5();
  const auto interior = find_interior_fixed_points(p5);
  if (interior.size() != 1) {
    why = "expected exactly one interior point for the coexistence set";
    return false;
  }
  const auto& r = interior.front();
  const double f = payoff_difference_f(r.location.x_i, r.location.x_t, p5);
  const double g = payoff_difference_g(r.location.x_i, r.location.x_t, p5);
  if (std::fabs(f) >= 1e-10 || std::fabs(g) >= 1e-10) {
    why = "interior residuals too large: |f|=" + std::to_string(std::fabs(f)) +
          " |g|=" + std::to_string(std::fabs(g));
    return false;
  }
  if (!(r.eigenvalues[1].real() > 0.0)) {
    why = "interior point lacks a positive eigenvalue";
    return false;
  }

  tsup::Sampler rng(60001);
  int found = 0;
  for (int i = 0; i < 200; ++i) {
    const GameParams p = rng.params(4, 20);
    for (const auto& fp : find_interior_fixed_points(p)) {
      ++found;
      if (fp.stability == Stability::Stable ||
          !(fp.eigenvalues[1].real() > 0.0)) {
        why = "draw " + std::to_string(i) + " produced a stable interior point";
        return false;
      }
    }
  }
  if (found == 0) {
    why = "random sweep never produced an interior point; sweep is vacuous";
    return false;
  }
  return true;
}

// 3. Closed-form payoffs vs the Monte-Carlo estimator (3 SE, 1e5 samples,
//    20 states per figure set) and factored RHS vs payoff-assembled RHS
//    (1e-10 relative) on 1000 random states.
bool criterion_oracle_equivalence(std::string& why) {
  constexpr Strategy kAll[] = {Strategy::P, Strategy::M, Strategy::T,
                               Strategy::U};
  tsup::Sampler rng(60003);
  std::uint64_t seed = 881000;
  for (const GameParams& p : tsup::figure_sets()) {
    for (int k = 0; k < 20; ++k) {
      const PopulationState st = rng.state(p);
      const ExpectedPayoffs closed = expected_payoffs(st, p);
      const McExpectedPayoffs mc = mc_expected_payoffs(st, p, 100000, seed++);
      for (Strategy s : kAll) {
        const McEstimate& e = mc.of(s);
        if (std::fabs(e.mean - closed.of(s)) > 3.0 * e.std_error) {
          why = "payoff mismatch beyond 3 SE: N=" + std::to_string(p.N) +
                " strategy=" + strategy_name(s);
          return false;
        }
      }
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const GameParams p = rng.params();
    const PopulationState st = rng.state(p);
    const VectorField2 a = replicator_rhs(st, p);
    const VectorField2 b = replicator_rhs_from_payoffs(st, p);
    const auto close = [](double u, double v) {
      return u == v || std::fabs(u - v) <= 1e-10 * std::max(std::fabs(u),
                                                            std::fabs(v));
    };
    if (!close(a.dx_i, b.dx_i) || !close(a.dx_t, b.dx_t)) {
      why = "vector-field mismatch at draw " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// 4. Analytic Jacobians vs central finite differences, 100 random locations
//    per figure set, 1e-6 agreement per entry.
bool criterion_jacobian(std::string& why) {
  tsup::Sampler rng(60004);
  const double h = 1e-6;
  for (const GameParams& p : tsup::figure_sets()) {
    for (int k = 0; k < 100; ++k) {
      const PopulationState at = rng.state(p);
      const Matrix2 an = jacobian(at, p);
      const VectorField2 xp = replicator_rhs({at.x_i + h, at.x_t}, p);
      const VectorField2 xm = replicator_rhs({at.x_i - h, at.x_t}, p);
      const VectorField2 tp = replicator_rhs({at.x_i, at.x_t + h}, p);
      const VectorField2 tm = replicator_rhs({at.x_i, at.x_t - h}, p);
      const double fd[4] = {(xp.dx_i - xm.dx_i) / (2 * h),
                            (tp.dx_i - tm.dx_i) / (2 * h),
                            (xp.dx_t - xm.dx_t) / (2 * h),
                            (tp.dx_t - tm.dx_t) / (2 * h)};
      const double d[4] = {an.a11 - fd[0], an.a12 - fd[1], an.a21 - fd[2],
                           an.a22 - fd[3]};
      for (double e : d)
        if (std::fabs(e) >= 1e-6) {
          why = "jacobian entry off by " + std::to_string(std::fabs(e)) +
                " for N=" + std::to_string(p.N);
          return false;
        }
    }
  }
  return true;
}

// 5. Basin sweeps at G=101 reproduce the reference curve shapes.
bool criterion_basin_shapes(std::string& why) {
  const auto run_sweep = [](const ExperimentConfig& cfg) {
    BasinOptions opt;
    opt.capture_eps = cfg.basin.capture_eps;
    opt.threads = cfg.threads;
    std::vector<double> fr;
    for (const auto& [v, b] :
         basin_sweep(*cfg.basin.axis, cfg.basin.values, cfg.params,
                     cfg.basin.grid_resolution, cfg.integrator, opt))
      fr.push_back(b.fraction);
    return fr;
  };
  const double tol = 0.01;

  const std::vector<double> low = run_sweep(load_config("fig9a.json"));
  size_t peak = 0;
  for (size_t k = 1; k < low.size(); ++k)
    if (low[k] > low[peak]) peak = k;
  if (peak == 0 || peak + 1 == low.size() || low[peak] < low.front() + tol ||
      low[peak] < low.back() + tol) {
    why = "moderate-sanction alpha sweep is not peaked in the interior";
    return false;
  }

  const std::vector<double> high = run_sweep(load_config("fig9b.json"));
  for (size_t k = 1; k < high.size(); ++k)
    if (high[k] < high[k - 1] - tol) {
      why = "strong-sanction alpha sweep is not monotone non-decreasing";
      return false;
    }

  const std::vector<double> lam = run_sweep(load_config("fig10.json"));
  for (size_t k = 1; k < lam.size(); ++k)
    if (lam[k] < lam[k - 1] - tol) {
      why = "lambda sweep is not monotone non-decreasing";
      return false;
    }
  if (std::fabs(lam[lam.size() - 1] - lam[lam.size() - 2]) > 1e-2) {
    why = "lambda sweep does not saturate at large lambda";
    return false;
  }
  return true;
}

// 6. Edge-root existence tracks the thresholds on 500 draws; the phi3-phi2
//    gap identity holds pointwise.
bool criterion_threshold_identities(std::string& why) {
  tsup::Sampler rng(60006);
  for (int i = 0; i < 500; ++i) {
    const GameParams p = rng.params(3, 20);
    const ThresholdSet th = thresholds(p);
    const bool band = th.lambda_low < p.lambda && p.lambda < th.lambda_high;
    if (root_phi1(p).has_value() != band) {
      why = "root_phi1 existence disagrees with the lambda band at draw " +
            std::to_string(i);
      return false;
    }
    const bool above = p.alpha > th.alpha_star;
    if (root_phi2(p).has_value() != above) {
      why = "root_phi2 existence disagrees with alpha_star at draw " +
            std::to_string(i);
      return false;
    }
    const double x2 = root_phi3(p);  // throws if it ever goes missing
    if (!(x2 > 0.0) || !(x2 < p.alpha)) {
      why = "root_phi3 left its interval at draw " + std::to_string(i);
      return false;
    }
    const double gap = 1.0 - pow_int(p.alpha, p.N - 1);
    for (int k = 0; k < 5; ++k) {
      const double x = p.alpha * rng.uniform();
      if (!rel_close(phi3(x, p) - phi2(x, p), gap, 1e-12)) {
        why = "phi3 - phi2 identity violated at draw " + std::to_string(i);
        return false;
      }
    }
  }
  return true;
}

// 7. Rerunning every shipped config through the command-line tool yields
//    byte-identical output files.
bool criterion_determinism(std::string& why) {
  namespace fs = std::filesystem;
  const fs::path scratch =
      fs::temp_directory_path() / "trustdyn_acceptance_7";
  fs::create_directories(scratch);

  struct Job {
    const char* config;
    const char* command;
    const char* extra_first = "";
    const char* extra_second = "";
  };
  const std::vector<Job> jobs = {
      {"fig2.json", "trajectory"},
      {"fig3.json", "trajectory"},
      {"fig4.json", "trajectory"},
      {"fig5.json", "trajectory"},
      {"fig6.json", "trajectory"},
      {"fig7.json", "trajectory"},
      {"fig4.json", "mc-check", "--seed 20260816", "--seed 20260816"},
      {"fig2.json", "equilibria", "--format json", "--format json"},
      {"fig8.json", "regime-map"},
      // thread counts must not affect basin bytes either
      {"fig9a.json", "basin", "--threads 1", "--threads 2"},
      {"fig9b.json", "basin", "--threads 2", "--threads 1"},
      {"fig10.json", "basin", "--threads 1", "--threads 2"},
  };

  for (size_t j = 0; j < jobs.size(); ++j) {
    const Job& job = jobs[j];
    std::string bytes[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out =
          scratch / (std::to_string(j) + "_" + std::to_string(run) + ".out");
      const std::string cmd =
          "\"" + g_cli_binary + "\" " + job.command + " --config \"" +
          g_configs_dir + "/" + job.config + "\" --out \"" + out.string() +
          "\" " + (run == 0 ? job.extra_first : job.extra_second) +
          " > /dev/null 2>&1";
      if (std::system(cmd.c_str()) != 0) {
        why = std::string("command failed: ") + job.command + " on " +
              job.config;
        return false;
      }
      bytes[run] = read_file(out.string());
    }
    if (bytes[0] != bytes[1]) {
      why = std::string("outputs differ between reruns: ") + job.command +
            " on " + job.config;
      return false;
    }
    if (bytes[0].empty()) {
      why = std::string("empty output: ") + job.command + " on " + job.config;
      return false;
    }
  }
  return true;
}

const char* kDescriptions[] = {
    "six figure parameter sets reproduce their equilibrium counts and stable sets",
    "interior fixed points are never stable (coexistence set + 200 random draws)",
    "closed forms match the Monte-Carlo estimator (3 SE) and the payoff-assembled field (1e-10)",
    "analytic jacobians match finite differences within 1e-6 on 100 points per set",
    "G=101 basin sweeps reproduce the reference curve shapes",
    "edge-root existence tracks the thresholds on 500 draws",
    "rerunning every shipped config yields byte-identical outputs",
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: acceptance <criterion 1..7> <configs-dir> <cli-binary>\n";
    return 2;
  }
  const int n = std::atoi(argv[1]);
  g_configs_dir = argv[2];
  g_cli_binary = argv[3];
  if (n < 1 || n > 7) {
    std::cerr << "criterion must be 1..7\n";
    return 2;
  }

  bool ok = false;
  std::string why;
  try {
    switch (n) {
      case 1: ok = criterion_case_reproduction(why); break;
      case 2: ok = criterion_interior_instability(why); break;
      case 3: ok = criterion_oracle_equivalence(why); break;
      case 4: ok = criterion_jacobian(why); break;
      case 5: ok = criterion_basin_shapes(why); break;
      case 6: ok = criterion_threshold_identities(why); break;
      case 7: ok = criterion_determinism(why); break;
    }
  } catch (const std::exception& e) {
    ok = false;
    why = std::string("exception: ") + e.what();
  }

  if (ok)
    std::cout << "PASS criterion " << n << ": " << kDescriptions[n - 1] << "\n";
  else
    std::cout << "FAIL criterion " << n << ": " << kDescriptions[n - 1]
              << " -- " << why << "\n";
  return ok ? 0 : 1;
}
