#include "vacshift/sweeps.hpp"

#include <cmath>
#include <limits>

#include "vacshift/config_io.hpp"
#include "vacshift/errors.hpp"
#include "vacshift/evolution.hpp"
#include "vacshift/report_io.hpp"

namespace vacshift {

Table1Report table1(const ExperimentConfig& config) {
  Table1Report t;
  t.omega_c = config.trap.omega_c();
  for (std::size_t j = 0; j < Table1Report::kCutoffs.size(); ++j)
    t.cutoffs[j] = cutoff_frequency(config.with(Table1Report::kCutoffs[j], config.mode));
  for (std::size_t i = 0; i < Table1Report::kModes.size(); ++i)
    for (std::size_t j = 0; j < Table1Report::kCutoffs.size(); ++j)
      t.values[i][j] = relative_shift(config.with(Table1Report::kCutoffs[j], Table1Report::kModes[i]));
  t.notes.push_back("exact logarithmic branch, renormalised shifts");
  if (config.trap.d_a() && config.trap.d_c())
    t.notes.push_back("omega_c = " + format_number(t.omega_c) + " rad/s, d_a = " + format_number(*config.trap.d_a()) +
                      " m, d_c = " + format_number(*config.trap.d_c()) + " m");
  return t;
}

namespace {

double shift_at(const ExperimentConfig& base, double b, ApproximationMode mode, CutoffKind kind) {
  const ExperimentConfig c = base.with_field(b).with(kind, mode);
  const double w = c.trap.omega_c();
  const double W = cutoff_frequency(c);
  if (!(W > w))
    throw Error(ErrorCode::SingularCutoff, "cut-off meets omega_c at B = " + std::to_string(b) + " T");
  return frequency_shift(damping_rate(c.constants, c.particle, w), w, W, mode);
}

}  // namespace

SweepResult bfield_sweep(const ExperimentConfig& config, double b_min, double b_max, std::size_t n_points,
                         ApproximationMode mode, CutoffKind cutoff) {
  if (!(b_min > 0) || !(b_max > b_min)) throw Error(ErrorCode::InvalidParameter, "need 0 < b_min < b_max");
  if (n_points < 16) throw Error(ErrorCode::InvalidParameter, "sweep needs at least 16 points");
  SweepResult r;
  r.cutoff = cutoff;
  r.mode = mode;
  r.config_echo = format_config(config.with(cutoff, mode));
  const double lmin = std::log(b_min);
  const double step = (std::log(b_max) - lmin) / double(n_points - 1);
  for (std::size_t k = 0; k < n_points; ++k) {
    const double b = k + 1 == n_points ? b_max : std::exp(lmin + step * double(k));
    r.b_values.push_back(b);
    r.omega_c_values.push_back(cyclotron_frequency(config.particle, b));
    r.delta_omega.push_back(shift_at(config, b, mode, cutoff));
  }
  r.local_exponents.assign(n_points, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t k = 1; k + 1 < n_points; ++k)
    r.local_exponents[k] = (std::log(std::abs(r.delta_omega[k + 1])) - std::log(std::abs(r.delta_omega[k - 1]))) /
                           (std::log(r.b_values[k + 1]) - std::log(r.b_values[k - 1]));
  r.midpoint_b = std::sqrt(b_min * b_max);
  const double h = 1e-4;
  r.midpoint_exponent = (std::log(std::abs(shift_at(config, r.midpoint_b * std::exp(h), mode, cutoff))) -
                         std::log(std::abs(shift_at(config, r.midpoint_b * std::exp(-h), mode, cutoff)))) /
                        (2 * h);
  return r;
}

double analytic_exponent(const ExperimentConfig& config, double b, ApproximationMode mode, CutoffKind kind) {
  const ExperimentConfig c = config.with_field(b).with(kind, mode);
  const double w = c.trap.omega_c();
  const double W = cutoff_frequency(c);
  if (!(W > w)) throw Error(ErrorCode::SingularCutoff, "cut-off does not exceed omega_c");
  // d ln W / d ln B
  double s = 0;
  const bool capped = raw_cutoff_frequency(c, kind) > W;
  if (!capped && kind == CutoffKind::DeBroglie) s = 1;
  if (!capped && kind == CutoffKind::ZeroPoint) s = 0.5;
  if (mode == ApproximationMode::BeyondRWA) {
    const double L = std::log((W + w) / (W - w));
    return 2 + ((W * s + w) / (W + w) - (W * s - w) / (W - w)) / L;
  }
  const double L = std::log(W / w - 1);
  return 2 + ((W * s - w) / (W - w) - 1) / L;
}

ValidityReport validity_report(const ExperimentConfig& config) {
  ValidityReport r;
  const RateSet rates = make_rate_set(config);
  r.gamma = rates.gamma;
  r.delta_minus_ren = rates.delta_minus_ren;
  r.t_max = validity_window(rates).t_max;
  r.cutoff = rates.omega_max;
  r.lwa_bound = lwa_bound(config.constants, config.particle, config.trap.omega_c());
  r.lwa_ok = r.cutoff <= r.lwa_bound * (1 + 1e-12);
  r.spin_ratio = spin_coupling_ratio(config.constants, config.particle, config.trap.omega_c(), r.cutoff);
  r.spin_negligible = r.spin_ratio > 100;
  r.warnings = config_warnings(config);
  return r;
}

}  // namespace vacshift
