#pragma once

#include <cstddef>
#include <vector>

#include "vacshift/rates.hpp"

namespace vacshift {

// Second-order perturbation-theory constants, in s^-1 (upper/lower sign).
struct PerturbationShifts {
  ShiftPair delta0;
  ShiftPair delta1;
  ShiftPair delta2a;
  ShiftPair delta2b;
  ShiftPair delta2c;
  double kappa = 0;
};

// Effective q^2 / (4 pi eps0 hbar c); alpha_fs for charge +-e.
double coupling_alpha(const PhysicalConstants& k, const ParticleSpec& particle);

PerturbationShifts pt_constants(const PhysicalConstants& k, const ParticleSpec& particle, double omega_c,
                                double omega_max);

// Delta E_n / hbar.
double pt_energy_shift(long n, const PerturbationShifts& s);

// Level-spacing shift from the Delta^(0) pair with its linear term dropped.
double pt_frequency_shift_renormalized(const PhysicalConstants& k, const ParticleSpec& particle,
                                       double omega_c, double omega_max);

// The perturbative treatment replaces the cos^2 polarisation weight by 1; its
// solid-angle average is 1/3, so the two shifts differ by exactly this factor.
inline constexpr double kAngularFactor = 3.0;

// ---- discretised bath -------------------------------------------------------

enum class CouplingProfile { Flat, InverseFrequency };

// Particle oscillator coupled to a finite set of field modes. Frequencies and
// couplings are angular (rad/s, or units of omega_c in scaled runs):
//   H/hbar = w n + sum_k w_k a_k+ a_k + sum_k g_k i(b+ - b)(a_k + a_k+),
// or the rotating-wave part i(b+ a_k - b a_k+) when counter_rotating is off.
struct BathModel {
  std::vector<double> mode_frequencies;
  std::vector<double> couplings;
  int particle_levels = 2;
  int photons_per_mode = 1;
  int excitation_cap = 1;  // max of n + sum of photon numbers; <= 0 disables
  bool counter_rotating = false;
};

inline constexpr std::size_t kBathDimensionGuard = std::size_t(1) << 16;

// Linear grid of n_modes on [lo, hi]; couplings chosen so that the discrete
// golden-rule rate at omega_c equals gamma_target.
BathModel make_linear_bath(std::size_t n_modes, double lo, double hi, double omega_c, double gamma_target,
                           CouplingProfile profile = CouplingProfile::Flat);

// Basis size after truncation, computed without building the basis; stops
// counting past the guard.
std::size_t bath_dimension(const BathModel& bath);

// 2 pi g(w)^2 / spacing with g^2 and the spacing interpolated at omega_c.
double discrete_golden_rule_rate(const BathModel& bath, double omega_c);

// Second-order shift of the 0 -> 1 transition from the same mode list.
double discrete_second_order_shift(const BathModel& bath, double omega_c);

struct BathFitOptions {
  std::size_t samples = 2000;
  double skip_fraction = 0.05;     // early transient excluded from the fits
  bool fit_decay = true;
  double max_log_residual = 0.02;  // rms of the ln P fit before FitFailure
};

struct BathFit {
  double gamma_fit = 0;
  double shift_fit = 0;
  double gamma_expected = 0;
  double shift_expected = 0;
  double log_residual = 0;
  double max_norm_deviation = 0;
  std::size_t dimension = 0;
  std::vector<double> times;
  std::vector<double> excited_population;
};

// Exact unitary evolution of (|0> + |1>)/sqrt2 x vacuum by diagonalising H.
// gamma_fit comes from the decay of the excited population, shift_fit from
// the rotation of <b> relative to omega_c.
BathFit bath_brute_force(const BathModel& bath, double omega_c, double duration,
                         const BathFitOptions& options = {});

}  // namespace vacshift
