#pragma once

#include <complex>
#include <span>
#include <vector>

namespace vacshift {

// Analytic signal x + i H[x] via FFT.
std::vector<std::complex<double>> analytic_signal(std::span<const double> values);

struct PhaseFit {
  double omega = 0;       // slope of the unwrapped phase
  double phase0 = 0;
  double rms_residual = 0;
  std::vector<double> times;     // trimmed window
  std::vector<double> envelope;  // |analytic signal| on the window
};

// Least-squares slope of the unwrapped analytic-signal phase; trim_fraction of
// the samples is dropped at each edge. Needs a uniform time grid.
PhaseFit fit_phase_slope(std::span<const double> times, std::span<const double> values,
                         double trim_fraction = 0.1);

// Same on a complex signal that is already analytic (e.g. <b>(t)); the
// returned omega is minus the phase slope, so e^{-i w t} gives +w.
PhaseFit fit_rotation(std::span<const double> times, std::span<const std::complex<double>> signal);

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double rms_residual = 0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

std::vector<double> unwrap(std::span<const double> phase);

}  // namespace vacshift
