#include "trustdyn/regimes.hpp"

#include <cmath>
#include <stdexcept>

namespace trustdyn {

const char* case_name(CaseId c) {
  switch (c) {
    case CaseId::Case1: return "Case1";
    case CaseId::Case2: return "Case2";
    case CaseId::Case3: return "Case3";
    case CaseId::Case4: return "Case4";
    case CaseId::Case5: return "Case5";
    case CaseId::Case6: return "Case6";
    case CaseId::Boundary: return "Boundary";
  }
  return "?";
}

RegimeVerdict classify_regime(const GameParams& p, double tol) {
  RegimeVerdict v;
  v.thresholds = thresholds(p);
  const double da = p.alpha - v.thresholds.alpha_star;
  const double dlo = p.lambda - v.thresholds.lambda_low;
  const double dhi = p.lambda - v.thresholds.lambda_high;
  if (std::fabs(da) <= tol || std::fabs(dlo) <= tol || std::fabs(dhi) <= tol) {
    v.case_id = CaseId::Boundary;
    return v;
  }
  const bool above = da > 0.0;
  using L = EquilibriumLabel;
  if (dlo < 0.0) {
    v.case_id = above ? CaseId::Case2 : CaseId::Case1;
    v.stable_set = above ? std::vector<L>{L::MU, L::PU} : std::vector<L>{L::MU};
  } else if (dhi < 0.0) {
    v.case_id = above ? CaseId::Case4 : CaseId::Case3;
    v.stable_set = above ? std::vector<L>{L::MU, L::PU, L::PT}
                         : std::vector<L>{L::MU, L::PT};
  } else {
    v.case_id = above ? CaseId::Case6 : CaseId::Case5;
    v.stable_set = {L::MU, L::PT};
  }
  return v;
}

RegimeMapResult regime_map(AxisRange lambda_range, AxisRange alpha_range,
                           int lambda_count, int alpha_count, int N, double r,
                           double R_T, double t_v, double tol) {
  if (lambda_count < 1 || alpha_count < 1)
    throw std::invalid_argument("regime map needs at least one cell per axis");
  if (!(lambda_range.lo > 0) || lambda_range.hi < lambda_range.lo)
    throw std::invalid_argument("lambda_range must be positive and ordered");
  if (!(alpha_range.lo > 0) || !(alpha_range.hi < 1) ||
      alpha_range.hi < alpha_range.lo)
    throw std::invalid_argument("alpha_range must lie inside (0, 1) and be ordered");

  auto linspace = [](const AxisRange& rng, int count) {
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i)
      v[i] = count == 1 ? rng.lo
                        : rng.lo + (rng.hi - rng.lo) * i / (count - 1);
    return v;
  };

  RegimeMapResult out;
  out.lambda_values = linspace(lambda_range, lambda_count);
  out.alpha_values = linspace(alpha_range, alpha_count);
  out.verdicts.reserve((size_t)lambda_count * alpha_count);
  for (double a : out.alpha_values)
    for (double l : out.lambda_values)
      out.verdicts.push_back(
          classify_regime(validate_params(N, a, l, r, R_T, t_v), tol));
  return out;
}

}  // namespace trustdyn
