#include <cmath>

#include "vacshift/evolution.hpp"

namespace vacshift {

ValidityWindow validity_window(double gamma, double dm) {
  if (dm == 0) throw Error(ErrorCode::UnboundedWindow, "Delta- is zero; positivity holds for all t");
  const double d2 = dm * dm;
  return {(gamma + std::sqrt(gamma * gamma + 4 * d2)) / (4 * d2), gamma, dm};
}

ValidityWindow validity_window(const RateSet& rates) { return validity_window(rates.gamma, rates.delta_minus_ren); }

double gaussian_positivity_margin(const RateSet& rates, double t) {
  if (!(t > 0)) throw Error(ErrorCode::InvalidParameter, "t must be positive");
  const double dm = rates.delta_minus_ren;
  return rates.gamma - 2 * dm * dm * t + 1 / (2 * t);
}

bool gaussian_positivity_check(const RateSet& rates, double t) { return gaussian_positivity_margin(rates, t) > 0; }

}  // namespace vacshift
