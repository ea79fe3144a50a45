#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "vacshift/errors.hpp"

namespace vacshift {

using Eigen::Index;

template <typename Real>
using Complex = std::complex<Real>;
template <typename Real>
using CMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

// Levels |0>..|dim-1> of one oscillator. hbar and mass only set the x/p
// scalings; pass SI values for physical units or 1 for the scaled regime.
template <typename Real = double>
class FockSpace {
 public:
  FockSpace(Index dim, Real omega_c, Real mass = Real(1), Real hbar = Real(1))
      : dim_(dim), omega_c_(omega_c), mass_(mass), hbar_(hbar) {
    if (dim < 2) throw Error(ErrorCode::DimensionTooSmall, "Fock space needs dim >= 2");
    if (!(omega_c > 0) || !(mass > 0) || !(hbar > 0))
      throw Error(ErrorCode::InvalidParameter, "omega_c, mass and hbar must be positive");
  }

  Index dim() const noexcept { return dim_; }
  Real omega_c() const noexcept { return omega_c_; }
  Real mass() const noexcept { return mass_; }
  Real hbar() const noexcept { return hbar_; }

 private:
  Index dim_;
  Real omega_c_;
  Real mass_;
  Real hbar_;
};

template <typename Real>
struct FockOperators {
  CMatrix<Real> b, bdag, x, p, n;
};

template <typename Real>
CMatrix<Real> annihilation(Index dim) {
  CMatrix<Real> b = CMatrix<Real>::Zero(dim, dim);
  for (Index k = 1; k < dim; ++k) b(k - 1, k) = std::sqrt(Real(k));
  return b;
}

// Products are formed after truncation, so [b, b+] has 1 - N in the corner.
template <typename Real>
FockOperators<Real> build_fock_operators(const FockSpace<Real>& space) {
  using C = Complex<Real>;
  FockOperators<Real> ops;
  ops.b = annihilation<Real>(space.dim());
  ops.bdag = ops.b.adjoint();
  const Real sx = std::sqrt(space.hbar() / (Real(2) * space.mass() * space.omega_c()));
  const Real sp = std::sqrt(space.hbar() * space.mass() * space.omega_c() / Real(2));
  ops.x = C(sx) * (ops.b + ops.bdag);
  ops.p = C(Real(0), -sp) * (ops.b - ops.bdag);
  ops.n = ops.bdag * ops.b;
  return ops;
}

template <typename Real>
Real hermiticity_deviation(const CMatrix<Real>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Real>
Real trace_deviation(const CMatrix<Real>& m) {
  return std::abs(m.trace() - Complex<Real>(1));
}

// Smallest eigenvalue of the Hermitian part.
template <typename Real>
Real min_eigenvalue(const CMatrix<Real>& m) {
  const CMatrix<Real> h = (m + m.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

template <typename Real = double>
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPositivityTol = 1e-10;

  explicit DensityMatrix(CMatrix<Real> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw Error(ErrorCode::DimensionMismatch, "density matrix must be square");
    if (m_.rows() < 2) throw Error(ErrorCode::DimensionTooSmall, "density matrix needs dim >= 2");
    if (hermiticity_deviation(m_) > Real(kHermitianTol))
      throw Error(ErrorCode::InvalidState, "density matrix is not Hermitian");
    if (trace_deviation(m_) > Real(kTraceTol))
      throw Error(ErrorCode::InvalidState, "density matrix trace differs from 1");
    if (min_eigenvalue(m_) < -Real(kPositivityTol))
      throw Error(ErrorCode::InvalidState, "density matrix has a negative eigenvalue");
  }

  Index dim() const noexcept { return m_.rows(); }
  const CMatrix<Real>& matrix() const noexcept { return m_; }
  Complex<Real> operator()(Index r, Index c) const { return m_(r, c); }

 private:
  CMatrix<Real> m_;
};

// Column-major vectorisation: vec(A s B) = (B^T kron A) vec(s).
template <typename Real>
CVector<Real> vec(const CMatrix<Real>& m) {
  return Eigen::Map<const CVector<Real>>(m.data(), m.size());
}

template <typename Real>
CMatrix<Real> unvec(const CVector<Real>& v, Index dim) {
  if (v.size() != dim * dim) throw Error(ErrorCode::DimensionMismatch, "vector length is not dim^2");
  return Eigen::Map<const CMatrix<Real>>(v.data(), dim, dim);
}

}  // namespace vacshift
