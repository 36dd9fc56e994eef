#include "trustdyn/params.hpp"

#include <stdexcept>

namespace trustdyn {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::P: return "P";
    case Strategy::M: return "M";
    case Strategy::T: return "T";
    case Strategy::U: return "U";
  }
  return "?";
}

GameParams validate_params(int N, double alpha, double lambda, double r,
                           double R_T, double t_v) {
  if (N < 3) throw std::invalid_argument("N must exceed 2");
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("alpha must lie strictly between 0 and 1");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (!(r > 0.0) || !(r < 1.0))
    throw std::invalid_argument("r must lie strictly between 0 and 1");
  if (!(R_T > 1.0)) throw std::invalid_argument("R_T must exceed 1");
  if (!(t_v > 0.0)) throw std::invalid_argument("t_v must be positive");
  GameParams p;
  p.N = N;
  p.alpha = alpha;
  p.lambda = lambda;
  p.r = r;
  p.R_T = R_T;
  p.t_v = t_v;
  p.R_U = (1.0 + r) * R_T;
  return p;
}

bool state_in_rectangle(const PopulationState& s, const GameParams& p,
                        double slack) {
  return s.x_i >= -slack && s.x_i <= p.alpha + slack && s.x_t >= -slack &&
         s.x_t <= 1.0 - p.alpha + slack;
}

}  // namespace trustdyn
