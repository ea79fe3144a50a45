#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vacshift/constants.hpp"

namespace vacshift {

struct ParticleSpec {
  double mass = 0.0;    // kg
  double charge = 0.0;  // C, sign allowed
  double g_factor = 2.00231930436;

  static ParticleSpec electron(const PhysicalConstants& k = {});
};

// Cyclotron-mode trap. omega_c is always resolved; b_field is kept when the
// trap was specified by field.
class TrapSpec {
 public:
  static TrapSpec from_frequency(double omega_c, std::optional<double> d_a = {},
                                 std::optional<double> d_c = {});
  static TrapSpec from_field(const ParticleSpec& particle, double b_field,
                             std::optional<double> d_a = {}, std::optional<double> d_c = {});

  double omega_c() const noexcept { return omega_c_; }
  std::optional<double> b_field() const noexcept { return b_field_; }
  std::optional<double> d_a() const noexcept { return d_a_; }
  std::optional<double> d_c() const noexcept { return d_c_; }

 private:
  TrapSpec(double omega_c, std::optional<double> b, std::optional<double> d_a,
           std::optional<double> d_c);

  double omega_c_;
  std::optional<double> b_field_;
  std::optional<double> d_a_;
  std::optional<double> d_c_;
};

enum class CutoffKind { LargestAmplitude, DeBroglie, ZeroPoint, Compton, Explicit };

struct CutoffSpec {
  CutoffKind kind = CutoffKind::ZeroPoint;
  double value = 0.0;  // rad/s, used only by Explicit

  static CutoffSpec explicit_value(double omega_max);
};

enum class ApproximationMode { WithRWA, BeyondRWA };

struct ExperimentConfig {
  PhysicalConstants constants;
  ParticleSpec particle;
  TrapSpec trap = TrapSpec::from_frequency(1.0);
  CutoffSpec cutoff;
  ApproximationMode mode = ApproximationMode::BeyondRWA;

  // Electron cyclotron reference: omega_c = 9.41e11 rad/s, d_a = 5.0 um,
  // d_c = 15.1 nm. See README for how these were fixed.
  static ExperimentConfig sec_reference(CutoffKind kind = CutoffKind::ZeroPoint,
                                        ApproximationMode mode = ApproximationMode::BeyondRWA);

  ExperimentConfig with(CutoffKind kind, ApproximationMode m) const;
  ExperimentConfig with_field(double b_field) const;
};

struct Warning {
  std::string code;
  std::string message;
};

double cyclotron_frequency(const ParticleSpec& particle, double b_field);

double lwa_bound(const PhysicalConstants& k, const ParticleSpec& particle, double omega_c);
double compton_frequency(const PhysicalConstants& k, const ParticleSpec& particle);

// Uncapped value of a cut-off model; throws MissingParameter when the trap
// lacks the length it needs.
double raw_cutoff_frequency(const ExperimentConfig& config, CutoffKind kind);
// Resolved cut-off, capped at the Compton frequency for the LWA kinds.
double cutoff_frequency(const ExperimentConfig& config);

double spin_coupling_ratio(const PhysicalConstants& k, const ParticleSpec& particle,
                           double omega_c, double mode_frequency);

// LWA violation and Compton capping are reported here instead of thrown.
std::vector<Warning> config_warnings(const ExperimentConfig& config);

std::string_view to_string(CutoffKind kind) noexcept;
std::string_view to_string(ApproximationMode mode) noexcept;
CutoffKind parse_cutoff_kind(std::string_view text);
ApproximationMode parse_mode(std::string_view text);

}  // namespace vacshift
