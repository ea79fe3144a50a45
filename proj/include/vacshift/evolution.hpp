#pragma once

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vacshift/liouvillian.hpp"

namespace vacshift {

struct IntegratorOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double initial_step = 0;  // 0: pick from the generator norm
  double max_step = 0;      // 0: unbounded
  std::size_t max_steps = 50'000'000;
  double positivity_threshold = 1e-6;
  double guard_threshold = 1e-6;
  Index guard_levels = 2;
  bool throw_on_positivity = false;
  bool throw_on_guard = false;
  bool keep_states = true;
};

struct StepDiagnostics {
  double trace_dev = 0;
  double herm_dev = 0;
  double min_eig = 0;
  double guard_population = 0;
};

template <typename Real = double>
struct EvolutionRecord {
  std::vector<Real> times;
  std::vector<CMatrix<Real>> states;  // empty when keep_states is off
  std::vector<StepDiagnostics> diagnostics;
  std::optional<Real> first_positivity_breach;
  std::optional<Real> first_guard_overflow;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
};

// Population in the top guard_levels of any tensor factor.
template <typename Real>
Real guard_band_population(const CMatrix<Real>& s, const std::vector<Index>& factors, Index guard_levels) {
  Real total = 0;
  for (Index k = 0; k < s.rows(); ++k) {
    Index rest = k;
    bool in_band = false;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      if (rest % *it >= *it - guard_levels) in_band = true;
      rest /= *it;
    }
    if (in_band) total += std::real(s(k, k));
  }
  return total;
}

template <typename Real>
StepDiagnostics diagnose(const CMatrix<Real>& s, const std::vector<Index>& factors, Index guard_levels) {
  return {double(trace_deviation(s)), double(hermiticity_deviation(s)), double(min_eigenvalue(s)),
          double(guard_band_population(s, factors, guard_levels))};
}

namespace detail {

// Dormand-Prince 5(4) tableau.
struct DP54 {
  static constexpr double c[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1, 1};
  static constexpr double a[7][6] = {
      {0, 0, 0, 0, 0, 0},
      {1.0 / 5, 0, 0, 0, 0, 0},
      {3.0 / 40, 9.0 / 40, 0, 0, 0, 0},
      {44.0 / 45, -56.0 / 15, 32.0 / 9, 0, 0, 0},
      {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729, 0, 0},
      {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656, 0},
      {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
  static constexpr double e[7] = {71.0 / 57600, 0, -71.0 / 16695, 71.0 / 1920,
                                  -17253.0 / 339200, 22.0 / 525, -1.0 / 40};
};

}  // namespace detail

// Integrates d vec(s)/dt = L vec(s) and samples at output_times, whose first
// entry is the initial time. The trace is never renormalised.
template <typename Real>
EvolutionRecord<Real> integrate(const Superoperator<Real>& gen, const CMatrix<Real>& rho0,
                                std::span<const Real> output_times, const IntegratorOptions& opt = {}) {
  using C = Complex<Real>;
  using Vec = CVector<Real>;
  using std::abs;
  const Index n = gen.dim();
  if (rho0.rows() != n || rho0.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "initial state does not match generator");
  if (output_times.empty()) throw Error(ErrorCode::InvalidParameter, "no output times");
  for (std::size_t k = 1; k < output_times.size(); ++k)
    if (!(output_times[k] > output_times[k - 1]))
      throw Error(ErrorCode::InvalidParameter, "output times must be strictly increasing");

  using Sparse = Eigen::SparseMatrix<C, Eigen::RowMajor>;
  const Sparse A = gen.matrix().sparseView();
  EvolutionRecord<Real> rec;

  auto record = [&](Real t, const Vec& y) {
    const CMatrix<Real> s = unvec<Real>(y, n);
    const StepDiagnostics d = diagnose<Real>(s, gen.factors(), opt.guard_levels);
    rec.times.push_back(t);
    rec.diagnostics.push_back(d);
    if (opt.keep_states) rec.states.push_back(s);
    if (d.min_eig < -opt.positivity_threshold && !rec.first_positivity_breach) {
      rec.first_positivity_breach = t;
      if (opt.throw_on_positivity)
        throw BreachError(ErrorCode::PositivityBreach, double(t),
                          "min eigenvalue " + std::to_string(d.min_eig) + " at t = " + std::to_string(double(t)));
    }
    if (d.guard_population > opt.guard_threshold && !rec.first_guard_overflow) {
      rec.first_guard_overflow = t;
      if (opt.throw_on_guard)
        throw BreachError(ErrorCode::GuardBandOverflow, double(t),
                          "guard-band population " + std::to_string(d.guard_population) +
                              " at t = " + std::to_string(double(t)));
    }
  };

  Vec y = vec<Real>(rho0);
  Real t = output_times[0];
  record(t, y);
  if (output_times.size() == 1) return rec;

  Real h = Real(opt.initial_step);
  if (!(h > 0)) {
    Real norm = 0;
    for (Index k = 0; k < A.outerSize(); ++k) {
      Real row = 0;
      for (typename Sparse::InnerIterator it(A, k); it; ++it) row += abs(it.value());
      norm = std::max(norm, row);
    }
    h = norm > 0 ? Real(0.05) / norm : output_times.back() - t;
  }
  const Real hmax = opt.max_step > 0 ? Real(opt.max_step) : std::numeric_limits<Real>::infinity();

  using detail::DP54;
  Vec k[7];
  k[0] = A * y;
  Vec ytmp(y.size()), ynew(y.size()), err(y.size());
  std::size_t steps = 0;

  for (std::size_t next = 1; next < output_times.size(); ++next) {
    const Real target = output_times[next];
    while (t < target) {
      if (++steps > opt.max_steps) throw Error(ErrorCode::ToleranceFailure, "step budget exhausted");
      h = std::min(h, hmax);
      bool last = false;
      if (t + h >= target || target - (t + h) < Real(1e-12) * abs(target)) {
        h = target - t;
        last = true;
      }
      for (int s = 1; s < 7; ++s) {
        ytmp = y;
        for (int j = 0; j < s; ++j)
          if (DP54::a[s][j] != 0) ytmp += C(h * Real(DP54::a[s][j])) * k[j];
        if (s == 6) {
          ynew = ytmp;
          k[6] = A * ynew;
        } else {
          k[s] = A * ytmp;
        }
      }
      err.setZero();
      for (int j = 0; j < 7; ++j)
        if (DP54::e[j] != 0) err += C(h * Real(DP54::e[j])) * k[j];
      Real acc = 0;
      for (Index i = 0; i < y.size(); ++i) {
        const Real sc = Real(opt.atol) + Real(opt.rtol) * std::sqrt(std::max(std::norm(y[i]), std::norm(ynew[i])));
        acc += std::norm(err[i]) / (sc * sc);
      }
      const Real enorm = std::sqrt(acc / Real(y.size()));
      if (!std::isfinite(double(enorm))) throw Error(ErrorCode::ToleranceFailure, "non-finite step error");
      const Real fac = enorm > 0 ? Real(0.9) * std::pow(enorm, Real(-0.2)) : Real(5);
      if (enorm <= 1) {
        t = last ? target : t + h;
        y = ynew;
        k[0] = k[6];
        ++rec.accepted_steps;
        h *= std::clamp(fac, Real(0.2), Real(5));
      } else {
        ++rec.rejected_steps;
        h *= std::clamp(fac, Real(0.1), Real(1));
        if (h < Real(1e-14) * std::max(Real(1), abs(t)))
          throw Error(ErrorCode::ToleranceFailure, "step size underflow at t = " + std::to_string(double(t)));
      }
    }
    record(t, y);
  }
  return rec;
}

template <typename Real>
EvolutionRecord<Real> integrate(const Superoperator<Real>& gen, const DensityMatrix<Real>& rho0,
                                std::span<const Real> output_times, const IntegratorOptions& opt = {}) {
  return integrate(gen, rho0.matrix(), output_times, opt);
}

template <typename Real = double>
std::vector<Real> uniform_times(Real t0, Real t1, std::size_t samples) {
  if (samples < 2) throw Error(ErrorCode::InvalidParameter, "need at least two samples");
  std::vector<Real> t(samples);
  for (std::size_t k = 0; k < samples; ++k) t[k] = t0 + (t1 - t0) * Real(k) / Real(samples - 1);
  return t;
}

struct ValidityWindow {
  double t_max = 0;
  double gamma = 0;
  double delta_minus_ren = 0;
};

// Largest t for which the Q-function of a Gaussian state stays positive.
ValidityWindow validity_window(const RateSet& rates);
ValidityWindow validity_window(double gamma, double delta_minus_ren);

// Gamma - 2 D-^2 t + 1/(2t); positive inside the window.
double gaussian_positivity_margin(const RateSet& rates, double t);
bool gaussian_positivity_check(const RateSet& rates, double t);

}  // namespace vacshift
