#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "vacshift/params.hpp"
#include "vacshift/rates.hpp"

namespace vacshift {

struct Table1Report {
  static constexpr std::array<CutoffKind, 3> kCutoffs = {CutoffKind::LargestAmplitude, CutoffKind::DeBroglie,
                                                         CutoffKind::ZeroPoint};
  static constexpr std::array<ApproximationMode, 2> kModes = {ApproximationMode::WithRWA,
                                                              ApproximationMode::BeyondRWA};
  // values[mode][cutoff]
  std::array<std::array<double, 3>, 2> values{};
  std::array<double, 3> cutoffs{};
  double omega_c = 0;
  std::vector<std::string> notes;
};

Table1Report table1(const ExperimentConfig& config);

struct SweepResult {
  std::vector<double> b_values;
  std::vector<double> omega_c_values;
  std::vector<double> delta_omega;
  std::vector<double> local_exponents;  // NaN at the two end points
  double midpoint_b = 0;
  double midpoint_exponent = 0;
  CutoffKind cutoff = CutoffKind::ZeroPoint;
  ApproximationMode mode = ApproximationMode::BeyondRWA;
  std::string config_echo;
};

// d_a and d_c stay fixed while omega_c follows B.
SweepResult bfield_sweep(const ExperimentConfig& config, double b_min, double b_max, std::size_t n_points,
                         ApproximationMode mode, CutoffKind cutoff);

// d ln|dw| / d ln B from the closed form, by differentiating the logarithm by hand.
double analytic_exponent(const ExperimentConfig& config, double b_field, ApproximationMode mode,
                         CutoffKind cutoff);

struct ValidityReport {
  double t_max = 0;
  double gamma = 0;
  double delta_minus_ren = 0;
  double cutoff = 0;
  double lwa_bound = 0;
  bool lwa_ok = true;
  double spin_ratio = 0;
  bool spin_negligible = true;
  std::vector<Warning> warnings;
};

ValidityReport validity_report(const ExperimentConfig& config);

}  // namespace vacshift
