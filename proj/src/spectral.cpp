#include "vacshift/spectral.hpp"

#include <unsupported/Eigen/FFT>
#include <cmath>
#include <numbers>

#include "vacshift/errors.hpp"

namespace vacshift {

std::vector<std::complex<double>> analytic_signal(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 4) throw Error(ErrorCode::InvalidParameter, "analytic signal needs at least 4 samples");
  std::vector<std::complex<double>> x(values.begin(), values.end());
  std::vector<std::complex<double>> spec;
  Eigen::FFT<double> fft;
  fft.fwd(spec, x);
  // keep DC (and Nyquist), double positive frequencies, drop negative ones
  for (std::size_t k = 1; k < n; ++k) {
    if (2 * k < n)
      spec[k] *= 2.0;
    else if (2 * k > n)
      spec[k] = 0.0;
  }
  std::vector<std::complex<double>> z;
  fft.inv(z, spec);
  return z;
}

std::vector<double> unwrap(std::span<const double> phase) {
  std::vector<double> out(phase.begin(), phase.end());
  double offset = 0;
  for (std::size_t k = 1; k < out.size(); ++k) {
    const double jump = phase[k] - phase[k - 1];
    offset -= 2 * std::numbers::pi * std::round(jump / (2 * std::numbers::pi));
    out[k] = phase[k] + offset;
  }
  return out;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw Error(ErrorCode::InvalidParameter, "line fit needs matching samples");
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < n; ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < n; ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  if (!(sxx > 0)) throw Error(ErrorCode::FitFailure, "degenerate abscissa");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = y[k] - (f.intercept + f.slope * x[k]);
    ss += r * r;
  }
  f.rms_residual = std::sqrt(ss / double(n));
  return f;
}

namespace {

void check_uniform(std::span<const double> t) {
  const double dt = (t.back() - t.front()) / double(t.size() - 1);
  for (std::size_t k = 1; k < t.size(); ++k)
    if (std::abs(t[k] - t[k - 1] - dt) > 1e-6 * dt)
      throw Error(ErrorCode::InvalidParameter, "phase fit needs a uniform time grid");
}

PhaseFit fit_unwrapped(std::span<const double> times, std::span<const std::complex<double>> z, std::size_t lo,
                       std::size_t hi) {
  PhaseFit out;
  std::vector<double> ph;
  for (std::size_t k = lo; k < hi; ++k) {
    out.times.push_back(times[k]);
    out.envelope.push_back(std::abs(z[k]));
    ph.push_back(std::arg(z[k]));
  }
  const auto un = unwrap(ph);
  const LineFit f = fit_line(out.times, un);
  out.omega = f.slope;
  out.phase0 = f.intercept;
  out.rms_residual = f.rms_residual;
  return out;
}

}  // namespace

PhaseFit fit_phase_slope(std::span<const double> times, std::span<const double> values, double trim) {
  if (times.size() != values.size()) throw Error(ErrorCode::DimensionMismatch, "times and values differ in length");
  if (times.size() < 16) throw Error(ErrorCode::InvalidParameter, "phase fit needs at least 16 samples");
  if (!(trim >= 0 && trim < 0.5)) throw Error(ErrorCode::InvalidParameter, "trim fraction must be in [0, 0.5)");
  check_uniform(times);
  const auto z = analytic_signal(values);
  const auto cut = std::size_t(trim * double(times.size()));
  return fit_unwrapped(times, z, cut, times.size() - cut);
}

PhaseFit fit_rotation(std::span<const double> times, std::span<const std::complex<double>> signal) {
  if (times.size() != signal.size() || times.size() < 2)
    throw Error(ErrorCode::DimensionMismatch, "times and signal differ in length");
  PhaseFit f = fit_unwrapped(times, signal, 0, times.size());
  f.omega = -f.omega;
  return f;
}

}  // namespace vacshift
