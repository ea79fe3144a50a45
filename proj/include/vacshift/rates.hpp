#pragma once

#include "vacshift/params.hpp"

namespace vacshift {

struct ShiftPair {
  double plus = 0.0;
  double minus = 0.0;
};

struct RateSet {
  double gamma = 0.0;
  double delta_plus_raw = 0.0;
  double delta_minus_raw = 0.0;
  double delta_plus_ren = 0.0;
  double delta_minus_ren = 0.0;
  double delta_omega = 0.0;
  double omega_c = 0.0;
  double omega_max = 0.0;
  ApproximationMode mode = ApproximationMode::BeyondRWA;
};

struct FreeParticleShift {
  double delta_e_fp = 0.0;
  double delta_e_lin = 0.0;
};

double damping_rate(const PhysicalConstants& k, const ParticleSpec& particle, double omega_c);

// hbar omega_c / m c^2
double kappa(const PhysicalConstants& k, const ParticleSpec& particle, double omega_c);

ShiftPair level_shifts_raw(double gamma, double omega_c, double omega_max);
ShiftPair level_shifts_renormalized(double gamma, double omega_c, double omega_max);
// (Gamma/2pi)(ln|w/W| -+ w/W), valid for W >> w.
ShiftPair level_shifts_renormalized_asymptotic(double gamma, double omega_c, double omega_max);

double frequency_shift(double gamma, double omega_c, double omega_max, ApproximationMode mode);
double frequency_shift_asymptotic(double gamma, double omega_c, double omega_max);
double frequency_shift(const ExperimentConfig& config);

double relative_shift(const ExperimentConfig& config);
// (4 alpha / 3 pi) kappa (w/W): beyond-RWA leading order, charge +-e.
double relative_shift_asymptotic(const ExperimentConfig& config);

inline double total_frequency(double omega_c, double delta_omega) { return omega_c + delta_omega; }

FreeParticleShift free_particle_shift(const PhysicalConstants& k, const ParticleSpec& particle,
                                      double omega_max);

RateSet make_rate_set(const ExperimentConfig& config);

// Same formulas in units where omega_c = 1: gamma and omega_max are ratios to omega_c.
RateSet scaled_rate_set(double gamma_ratio, double omega_max_ratio,
                        ApproximationMode mode = ApproximationMode::BeyondRWA);

}  // namespace vacshift
