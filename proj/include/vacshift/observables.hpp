#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "vacshift/evolution.hpp"

namespace vacshift {

struct Fock {
  Index n = 0;
};
struct Coherent {
  std::complex<double> alpha;
};
struct Thermal {
  double n_bar = 0;
};
using StateSpec = std::variant<Fock, Coherent, Thermal>;

// Mean occupation for inverse temperature beta (1/J).
inline Thermal thermal_from_beta(double beta, double hbar, double omega_c) {
  return {1.0 / std::expm1(beta * hbar * omega_c)};
}

template <typename Real>
DensityMatrix<Real> make_state(const StateSpec& spec, const FockSpace<Real>& space) {
  using C = Complex<Real>;
  const Index d = space.dim();
  const Real guard = Real(d) / 4;
  CMatrix<Real> rho = CMatrix<Real>::Zero(d, d);
  if (const auto* f = std::get_if<Fock>(&spec)) {
    if (f->n < 0 || f->n >= d) throw Error(ErrorCode::InvalidParameter, "Fock level outside the space");
    rho(f->n, f->n) = 1;
  } else if (const auto* c = std::get_if<Coherent>(&spec)) {
    const C alpha(Real(c->alpha.real()), Real(c->alpha.imag()));
    if (std::norm(alpha) > guard) throw Error(ErrorCode::TruncationRisk, "|alpha|^2 exceeds dim/4");
    CVector<Real> psi(d);
    C amp = std::exp(-std::norm(alpha) / Real(2));
    for (Index k = 0; k < d; ++k) {
      psi[k] = amp;
      amp *= alpha / std::sqrt(Real(k + 1));
    }
    psi /= psi.norm();
    rho = psi * psi.adjoint();
  } else {
    const Real nb = Real(std::get<Thermal>(spec).n_bar);
    if (nb < 0) throw Error(ErrorCode::InvalidParameter, "negative thermal occupation");
    if (nb > guard) throw Error(ErrorCode::TruncationRisk, "thermal occupation exceeds dim/4");
    const Real q = nb / (1 + nb);
    Real w = 1, total = 0;
    for (Index k = 0; k < d; ++k, w *= q) {
      rho(k, k) = w;
      total += w;
    }
    rho /= C(total);
  }
  return DensityMatrix<Real>(std::move(rho));
}

enum class Observable { Position, Momentum, Number, Witness };

template <typename Real>
CMatrix<Real> observable_matrix(Observable o, const FockSpace<Real>& space) {
  const auto ops = build_fock_operators(space);
  switch (o) {
    case Observable::Position: return ops.x;
    case Observable::Momentum: return ops.p;
    case Observable::Number: return ops.n;
    case Observable::Witness: return ops.b * ops.b + ops.bdag * ops.bdag;
  }
  throw Error(ErrorCode::InvalidParameter, "unknown observable");
}

template <typename Real>
Real expect(const CMatrix<Real>& op, const CMatrix<Real>& state) {
  if (op.rows() != state.rows() || op.cols() != state.cols())
    throw Error(ErrorCode::DimensionMismatch, "observable and state sizes differ");
  return (state * op).trace().real();
}

template <typename Real>
Real expect(Observable o, const DensityMatrix<Real>& state, const FockSpace<Real>& space) {
  if (state.dim() != space.dim()) throw Error(ErrorCode::DimensionMismatch, "state does not match space");
  return expect<Real>(observable_matrix(o, space), state.matrix());
}

// <X> from matrix elements: sum_n sqrt(n(n-1)) s[n][n-2] + sqrt((n+1)(n+2)) s[n][n+2].
template <typename Real>
Complex<Real> witness_from_elements(const CMatrix<Real>& s) {
  const Index d = s.rows();
  Complex<Real> acc(0);
  for (Index n = 0; n < d; ++n) {
    if (n >= 2) acc += std::sqrt(Real(n * (n - 1))) * s(n, n - 2);
    if (n + 2 < d) acc += std::sqrt(Real((n + 1) * (n + 2))) * s(n, n + 2);
  }
  return acc;
}

struct ObservableSeries {
  std::vector<double> times;
  std::vector<double> values;
  std::string label;
};

template <typename Real>
ObservableSeries observable_series(const EvolutionRecord<Real>& rec, const CMatrix<Real>& op,
                                   std::string label) {
  if (rec.states.size() != rec.times.size())
    throw Error(ErrorCode::InvalidParameter, "record was integrated without keeping states");
  ObservableSeries out{{}, {}, std::move(label)};
  out.times.reserve(rec.times.size());
  out.values.reserve(rec.times.size());
  for (std::size_t k = 0; k < rec.times.size(); ++k) {
    out.times.push_back(double(rec.times[k]));
    out.values.push_back(double(expect<Real>(op, rec.states[k])));
  }
  return out;
}

struct DampedOscillatorSolution {
  double x0 = 0;
  double gamma = 0;
  double omega_c = 0;
  double delta_omega = 0;
  double omega_eff = 0;  // omega_c + delta_omega
  std::complex<double> lambda_plus;
  std::complex<double> lambda_minus;
};

inline DampedOscillatorSolution make_damped_solution(double x0, double gamma, double omega_c,
                                                     double delta_omega) {
  const std::complex<double> disc(gamma * gamma - 4 * omega_c * omega_c - 8 * omega_c * delta_omega, 0);
  const std::complex<double> root = std::sqrt(disc);
  return {x0,          gamma, omega_c, delta_omega, omega_c + delta_omega,
          (-gamma + root) / 2.0, (-gamma - root) / 2.0};
}

struct XTrajectory {
  ObservableSeries exact;   // x0 (e^{l+ t} + e^{l- t}) / 2
  ObservableSeries cosine;  // x0 e^{-G t/2} cos(omega_eff t)
};

// The two-exponential branch is halved so that both start at x0.
XTrajectory analytic_x_trajectory(const DampedOscillatorSolution& sol, const std::vector<double>& times);

// Max deviation between the Heisenberg action of the Redfield generator on
// x, p and the first-moment equations
//   d<x>/dt = -G <x> + (w + 2 dw)/(m w) <p>,  d<p>/dt = -m w^2 <x>,
// over the block that is clear of the last `margin` levels, relative to the
// size of the predicted terms.
template <typename Real>
Real first_moment_rhs_check(const FockSpace<Real>& space, const GeneratorCoefficients<Real>& g,
                            Index margin = 3) {
  using C = Complex<Real>;
  const auto gen = build_redfield_generator(space, g);
  const auto ops = build_fock_operators(space);
  const Real w = g.omega_c;
  const Real m = space.mass();
  const Real dw = g.delta_minus - g.delta_plus;
  const CMatrix<Real> dx = gen.adjoint_apply(ops.x);
  const CMatrix<Real> dp = gen.adjoint_apply(ops.p);
  const CMatrix<Real> px = C(-g.gamma) * ops.x + C((w + 2 * dw) / (m * w)) * ops.p;
  const CMatrix<Real> pp = C(-m * w * w) * ops.x;
  const Index k = space.dim() - margin;
  if (k < 1) throw Error(ErrorCode::DimensionTooSmall, "space too small for the guard margin");
  const Real rx = (dx - px).topLeftCorner(k, k).cwiseAbs().maxCoeff() /
                  std::max(px.topLeftCorner(k, k).cwiseAbs().maxCoeff(), std::numeric_limits<Real>::min());
  const Real rp = (dp - pp).topLeftCorner(k, k).cwiseAbs().maxCoeff() /
                  std::max(pp.topLeftCorner(k, k).cwiseAbs().maxCoeff(), std::numeric_limits<Real>::min());
  return std::max(rx, rp);
}

template <typename Real>
Real first_moment_rhs_check(const RateSet& rates, Index dim = 16) {
  const FockSpace<Real> space(dim, Real(rates.omega_c));
  return first_moment_rhs_check(space, generator_coefficients<Real>(rates));
}

}  // namespace vacshift
