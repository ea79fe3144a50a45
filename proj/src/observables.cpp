#include "vacshift/observables.hpp"

namespace vacshift {

XTrajectory analytic_x_trajectory(const DampedOscillatorSolution& sol, const std::vector<double>& times) {
  XTrajectory out{{times, {}, "x_exact"}, {times, {}, "x_cosine"}};
  out.exact.values.reserve(times.size());
  out.cosine.values.reserve(times.size());
  for (const double t : times) {
    out.exact.values.push_back(sol.x0 * 0.5 * (std::exp(sol.lambda_plus * t) + std::exp(sol.lambda_minus * t)).real());
    out.cosine.values.push_back(sol.x0 * std::exp(-sol.gamma * t / 2) * std::cos(sol.omega_eff * t));
  }
  return out;
}

}  // namespace vacshift
