#pragma once

#include <vector>

#include "trustdyn/equilibria.hpp"
#include "trustdyn/params.hpp"

namespace trustdyn {

// The six dynamical regimes of the lambda-alpha plane, split by alpha_star,
// lambda_low(alpha) and lambda_high. Boundary = some comparison within tol.
enum class CaseId { Case1, Case2, Case3, Case4, Case5, Case6, Boundary };

const char* case_name(CaseId c);

struct RegimeVerdict {
  CaseId case_id = CaseId::Boundary;
  std::vector<EquilibriumLabel> stable_set;  // empty for Boundary
  ThresholdSet thresholds;
};

// Compares alpha against alpha_star and lambda against the two thresholds:
//   below lambda_low:            Case1 (alpha < alpha_star) / Case2 (above)
//   between lambda_low and high: Case3 / Case4
//   above lambda_high:           Case5 / Case6
// Any comparison within tol yields Boundary.
RegimeVerdict classify_regime(const GameParams& p, double tol = 1e-9);

struct AxisRange {
  double lo = 0, hi = 0;
};

struct RegimeMapResult {
  std::vector<double> alpha_values;
  std::vector<double> lambda_values;
  // Row-major: verdicts[i_alpha * lambda_values.size() + i_lambda].
  std::vector<RegimeVerdict> verdicts;
};

// Classifies every (alpha, lambda) cell of an evenly spaced grid with the
// remaining parameters fixed. Counts of 1 place the single value at the
// range's low end.
RegimeMapResult regime_map(AxisRange lambda_range, AxisRange alpha_range,
                           int lambda_count, int alpha_count, int N, double r,
                           double R_T, double t_v, double tol = 1e-9);

}  // namespace trustdyn
