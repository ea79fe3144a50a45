#include "vacshift/rates.hpp"

#include <cmath>
#include <numbers>

#include "vacshift/errors.hpp"

namespace vacshift {

namespace {

constexpr double pi = std::numbers::pi;

void require_positive(double omega_c, double omega_max) {
  if (!(omega_c > 0)) throw Error(ErrorCode::InvalidParameter, "omega_c must be positive");
  if (!(omega_max > 0)) throw Error(ErrorCode::InvalidParameter, "cut-off must be positive");
  if (omega_max == omega_c) throw Error(ErrorCode::SingularCutoff, "cut-off equals omega_c");
}

void require_above(double omega_c, double omega_max) {
  require_positive(omega_c, omega_max);
  if (omega_max < omega_c) throw Error(ErrorCode::InvalidParameter, "cut-off must exceed omega_c");
}

}  // namespace

double damping_rate(const PhysicalConstants& k, const ParticleSpec& p, double omega_c) {
  if (!(omega_c > 0)) throw Error(ErrorCode::InvalidParameter, "omega_c must be positive");
  const double c3 = k.c * k.c * k.c;
  return 4 * p.charge * p.charge * omega_c * omega_c / (4 * pi * k.eps0 * 3 * p.mass * c3);
}

double kappa(const PhysicalConstants& k, const ParticleSpec& p, double omega_c) {
  return k.hbar * omega_c / (p.mass * k.c * k.c);
}

ShiftPair level_shifts_raw(double gamma, double w, double W) {
  require_positive(w, W);
  const double pre = gamma / (2 * pi * w);
  const double lm = W < w ? std::log1p(-W / w) : std::log(W / w - 1);
  return {pre * (W - w * std::log1p(W / w)), pre * (-W - w * lm)};
}

ShiftPair level_shifts_renormalized(double gamma, double w, double W) {
  require_above(w, W);
  const double pre = -gamma / (2 * pi);
  return {pre * std::log1p(W / w), pre * std::log(W / w - 1)};
}

ShiftPair level_shifts_renormalized_asymptotic(double gamma, double w, double W) {
  require_above(w, W);
  const double pre = gamma / (2 * pi);
  const double l = std::log(w / W);
  return {pre * (l - w / W), pre * (l + w / W)};
}

double frequency_shift(double gamma, double w, double W, ApproximationMode mode) {
  require_above(w, W);
  if (mode == ApproximationMode::WithRWA) return level_shifts_renormalized(gamma, w, W).minus;
  // |(w - W)/(w + W)| = 1 - 2w/(w + W) for W > w
  return -gamma / (2 * pi) * std::log1p(-2 * w / (w + W));
}

double frequency_shift_asymptotic(double gamma, double w, double W) {
  require_above(w, W);
  return gamma * w / (pi * W);
}

double frequency_shift(const ExperimentConfig& c) {
  const double w = c.trap.omega_c();
  return frequency_shift(damping_rate(c.constants, c.particle, w), w, cutoff_frequency(c), c.mode);
}

double relative_shift(const ExperimentConfig& c) { return frequency_shift(c) / c.trap.omega_c(); }

double relative_shift_asymptotic(const ExperimentConfig& c) {
  const double w = c.trap.omega_c();
  const double W = cutoff_frequency(c);
  require_above(w, W);
  const double q_over_e = c.particle.charge / c.constants.e;
  return 4 * c.constants.alpha_fs / (3 * pi) * q_over_e * q_over_e * kappa(c.constants, c.particle, w) * (w / W);
}

FreeParticleShift free_particle_shift(const PhysicalConstants& k, const ParticleSpec& p, double omega_max) {
  if (!(omega_max > 0)) throw Error(ErrorCode::InvalidParameter, "cut-off must be positive");
  const double lin = p.charge * p.charge * omega_max / (3 * pi * pi * k.eps0 * p.mass * k.c * k.c * k.c);
  return {2 * lin, lin};
}

namespace {

RateSet assemble(double gamma, double w, double W, ApproximationMode mode) {
  RateSet r;
  r.gamma = gamma;
  r.omega_c = w;
  r.omega_max = W;
  r.mode = mode;
  const ShiftPair raw = level_shifts_raw(gamma, w, W);
  const ShiftPair ren = level_shifts_renormalized(gamma, w, W);
  r.delta_plus_raw = raw.plus;
  r.delta_minus_raw = raw.minus;
  r.delta_plus_ren = ren.plus;
  r.delta_minus_ren = ren.minus;
  r.delta_omega = mode == ApproximationMode::BeyondRWA ? ren.minus - ren.plus : ren.minus;
  return r;
}

}  // namespace

RateSet make_rate_set(const ExperimentConfig& c) {
  const double w = c.trap.omega_c();
  return assemble(damping_rate(c.constants, c.particle, w), w, cutoff_frequency(c), c.mode);
}

RateSet scaled_rate_set(double gamma_ratio, double omega_max_ratio, ApproximationMode mode) {
  if (gamma_ratio < 0) throw Error(ErrorCode::InvalidParameter, "gamma ratio must be >= 0");
  return assemble(gamma_ratio, 1.0, omega_max_ratio, mode);
}

}  // namespace vacshift
