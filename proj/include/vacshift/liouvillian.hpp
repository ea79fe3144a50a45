#pragma once

#include <unsupported/Eigen/KroneckerProduct>
#include <cmath>
#include <ostream>
#include <vector>

#include "vacshift/fock.hpp"
#include "vacshift/rates.hpp"

namespace vacshift {

enum class GeneratorKind { Redfield, Lindblad, RedfieldXP, Redfield2D, Reduced1D };

// Rates entering a generator, in the same time unit as omega_c.
template <typename Real = double>
struct GeneratorCoefficients {
  Real omega_c = 1;
  Real gamma = 0;
  Real delta_plus = 0;
  Real delta_minus = 0;
};

enum class ShiftChoice { Renormalized, Raw };

template <typename Real = double>
GeneratorCoefficients<Real> generator_coefficients(const RateSet& r,
                                                   ShiftChoice choice = ShiftChoice::Renormalized) {
  const bool ren = choice == ShiftChoice::Renormalized;
  return {Real(r.omega_c), Real(r.gamma), Real(ren ? r.delta_plus_ren : r.delta_plus_raw),
          Real(ren ? r.delta_minus_ren : r.delta_minus_raw)};
}

template <typename Real = double>
class Superoperator {
 public:
  Superoperator(CMatrix<Real> m, std::vector<Index> factors, GeneratorKind kind,
                ApproximationMode mode, GeneratorCoefficients<Real> coeffs)
      : m_(std::move(m)), factors_(std::move(factors)), kind_(kind), mode_(mode), coeffs_(coeffs) {
    dim_ = 1;
    for (Index f : factors_) dim_ *= f;
    if (m_.rows() != dim_ * dim_ || m_.cols() != dim_ * dim_)
      throw Error(ErrorCode::DimensionMismatch, "superoperator size does not match factors");
  }

  Index dim() const noexcept { return dim_; }
  const std::vector<Index>& factors() const noexcept { return factors_; }
  const CMatrix<Real>& matrix() const noexcept { return m_; }
  GeneratorKind kind() const noexcept { return kind_; }
  ApproximationMode mode() const noexcept { return mode_; }
  const GeneratorCoefficients<Real>& coefficients() const noexcept { return coeffs_; }

  CMatrix<Real> apply(const CMatrix<Real>& sigma) const {
    if (sigma.rows() != dim_ || sigma.cols() != dim_)
      throw Error(ErrorCode::DimensionMismatch, "operand does not match generator dimension");
    return unvec<Real>(m_ * vec<Real>(sigma), dim_);
  }

  // Heisenberg-picture action: Tr[L(s) O] = Tr[s L'(O)].
  CMatrix<Real> adjoint_apply(const CMatrix<Real>& op) const {
    if (op.rows() != dim_ || op.cols() != dim_)
      throw Error(ErrorCode::DimensionMismatch, "operand does not match generator dimension");
    const CMatrix<Real> ot = op.transpose();
    return unvec<Real>(m_.transpose() * vec<Real>(ot), dim_).transpose();
  }

 private:
  CMatrix<Real> m_;
  std::vector<Index> factors_;
  Index dim_;
  GeneratorKind kind_;
  ApproximationMode mode_;
  GeneratorCoefficients<Real> coeffs_;
};

namespace superop {

template <typename Real>
CMatrix<Real> left(const CMatrix<Real>& a) {
  return Eigen::kroneckerProduct(CMatrix<Real>::Identity(a.rows(), a.cols()), a);
}
template <typename Real>
CMatrix<Real> right(const CMatrix<Real>& a) {
  return Eigen::kroneckerProduct(a.transpose(), CMatrix<Real>::Identity(a.rows(), a.cols()));
}
// s -> a s c
template <typename Real>
CMatrix<Real> sandwich(const CMatrix<Real>& a, const CMatrix<Real>& c) {
  return Eigen::kroneckerProduct(c.transpose(), a);
}
template <typename Real>
CMatrix<Real> commutator(const CMatrix<Real>& a) {
  return left(a) - right(a);
}

// The five-line generator for an arbitrary lowering operator b.
template <typename Real>
CMatrix<Real> redfield_block(const CMatrix<Real>& b, const GeneratorCoefficients<Real>& g) {
  using C = Complex<Real>;
  const C i(0, 1);
  const CMatrix<Real> bd = b.adjoint();
  const CMatrix<Real> n = bd * b;
  const CMatrix<Real> b2 = b * b;
  const CMatrix<Real> bd2 = bd * bd;
  const CMatrix<Real> bb = sandwich<Real>(b, b);
  const CMatrix<Real> bdbd = sandwich<Real>(bd, bd);

  CMatrix<Real> m = -i * C(g.omega_c + g.delta_minus - g.delta_plus) * commutator<Real>(n);
  m += C(g.gamma) * (sandwich<Real>(b, bd) - C(Real(0.5)) * (left<Real>(n) + right<Real>(n)));
  m += i * C(g.delta_plus) * (bdbd - left<Real>(bd2) - bb + right<Real>(b2));
  m += i * C(g.delta_minus) * (bdbd - right<Real>(bd2) - bb + left<Real>(b2));
  m += C(g.gamma / 2) * (right<Real>(bd2) - bdbd - bb + left<Real>(b2));
  return m;
}

}  // namespace superop

namespace detail {

template <typename Real>
void check_space(const FockSpace<Real>& space, const GeneratorCoefficients<Real>& g) {
  using std::abs;
  if (abs(space.omega_c() - g.omega_c) > Real(1e-12) * abs(g.omega_c))
    throw Error(ErrorCode::DimensionMismatch, "Fock space and rates disagree on omega_c");
}

}  // namespace detail

template <typename Real>
Superoperator<Real> build_redfield_generator(const FockSpace<Real>& space,
                                             const GeneratorCoefficients<Real>& g) {
  detail::check_space(space, g);
  return {superop::redfield_block<Real>(annihilation<Real>(space.dim()), g),
          {space.dim()},
          GeneratorKind::Redfield,
          ApproximationMode::BeyondRWA,
          g};
}

template <typename Real>
Superoperator<Real> build_redfield_generator(const FockSpace<Real>& space, const RateSet& rates) {
  if (rates.mode != ApproximationMode::BeyondRWA)
    throw Error(ErrorCode::InvalidParameter, "Redfield generator needs a beyond-RWA rate set");
  return build_redfield_generator(space, generator_coefficients<Real>(rates));
}

// -i(w + D-)[n, s] + G(b s b+ - {n, s}/2). delta_plus is ignored.
template <typename Real>
Superoperator<Real> build_lindblad_generator(const FockSpace<Real>& space,
                                             const GeneratorCoefficients<Real>& g) {
  using C = Complex<Real>;
  detail::check_space(space, g);
  const CMatrix<Real> b = annihilation<Real>(space.dim());
  const CMatrix<Real> bd = b.adjoint();
  const CMatrix<Real> n = bd * b;
  CMatrix<Real> m = C(0, -1) * C(g.omega_c + g.delta_minus) * superop::commutator<Real>(n);
  m += C(g.gamma) * (superop::sandwich<Real>(b, bd) -
                     C(Real(0.5)) * (superop::left<Real>(n) + superop::right<Real>(n)));
  return {std::move(m), {space.dim()}, GeneratorKind::Lindblad, ApproximationMode::WithRWA, g};
}

template <typename Real>
Superoperator<Real> build_lindblad_generator(const FockSpace<Real>& space, const RateSet& rates) {
  if (rates.mode != ApproximationMode::WithRWA)
    throw Error(ErrorCode::InvalidParameter, "Lindblad generator needs an RWA rate set");
  return build_lindblad_generator(space, generator_coefficients<Real>(rates));
}

// Same generator written with x and p.
template <typename Real>
Superoperator<Real> build_xp_generator(const FockSpace<Real>& space,
                                       const GeneratorCoefficients<Real>& g) {
  using C = Complex<Real>;
  using superop::commutator;
  using superop::left;
  using superop::right;
  using superop::sandwich;
  detail::check_space(space, g);
  const auto ops = build_fock_operators(space);
  const CMatrix<Real>& x = ops.x;
  const CMatrix<Real>& p = ops.p;
  const Real hb = space.hbar();
  const Real m = space.mass();
  const Real w = g.omega_c;
  const C i(0, 1);
  const C half(Real(0.5));
  // Products are formed one level up and then cut, so that x^2, p^2, xp and
  // px agree with their ladder expansions on every retained level.
  const Index d = space.dim();
  const auto up = build_fock_operators(FockSpace<Real>(d + 1, space.omega_c(), space.mass(), hb));
  const CMatrix<Real> p2 = (up.p * up.p).topLeftCorner(d, d);
  const CMatrix<Real> x2 = (up.x * up.x).topLeftCorner(d, d);
  const CMatrix<Real> xp = (up.x * up.p).topLeftCorner(d, d);
  const CMatrix<Real> px = (up.p * up.x).topLeftCorner(d, d);
  const Real ds = g.delta_minus + g.delta_plus;
  const Real dd = g.delta_minus - g.delta_plus;

  CMatrix<Real> L = -i / C(hb) * C(1 + 2 * dd / w) * commutator<Real>(CMatrix<Real>(p2 / C(2 * m)));
  L -= i * C(w * w * m / (2 * hb)) * commutator<Real>(x2);
  L += C(g.gamma / (hb * m * w)) * (sandwich<Real>(p, p) - half * left<Real>(p2) - half * right<Real>(p2));
  L += C(ds, g.gamma / 2) / C(hb) * (sandwich<Real>(p, x) - half * left<Real>(xp) - half * right<Real>(xp));
  L += C(ds, -g.gamma / 2) / C(hb) * (sandwich<Real>(x, p) - half * left<Real>(px) - half * right<Real>(px));
  L -= C(dd + w, -g.gamma / 2) / C(2 * hb) * commutator<Real>(px);
  L += C(dd + w, g.gamma / 2) / C(2 * hb) * commutator<Real>(xp);
  return {std::move(L), {space.dim()}, GeneratorKind::RedfieldXP, ApproximationMode::BeyondRWA, g};
}

// Two cyclotron quadratures with composite index ix * Ny + iy and no cross terms.
template <typename Real>
Superoperator<Real> build_2d_generator(const FockSpace<Real>& space_x, const FockSpace<Real>& space_y,
                                       const GeneratorCoefficients<Real>& g) {
  using std::abs;
  if (abs(space_x.omega_c() - space_y.omega_c()) > Real(1e-12) * abs(space_x.omega_c()))
    throw Error(ErrorCode::DimensionMismatch, "x and y spaces must share omega_c");
  detail::check_space(space_x, g);
  const Index nx = space_x.dim();
  const Index ny = space_y.dim();
  const CMatrix<Real> bx =
      Eigen::kroneckerProduct(annihilation<Real>(nx), CMatrix<Real>::Identity(ny, ny)).eval();
  const CMatrix<Real> by =
      Eigen::kroneckerProduct(CMatrix<Real>::Identity(nx, nx), annihilation<Real>(ny)).eval();
  CMatrix<Real> m = superop::redfield_block<Real>(bx, g) + superop::redfield_block<Real>(by, g);
  return {std::move(m), {nx, ny}, GeneratorKind::Redfield2D, ApproximationMode::BeyondRWA, g};
}

template <typename Real>
CMatrix<Real> partial_trace_second(const CMatrix<Real>& sigma, Index nx, Index ny) {
  if (sigma.rows() != nx * ny || sigma.cols() != nx * ny)
    throw Error(ErrorCode::DimensionMismatch, "state does not match nx * ny");
  CMatrix<Real> out = CMatrix<Real>::Zero(nx, nx);
  for (Index i = 0; i < nx; ++i)
    for (Index j = 0; j < nx; ++j)
      for (Index k = 0; k < ny; ++k) out(i, j) += sigma(i * ny + k, j * ny + k);
  return out;
}

// x-marginal generator: s_x -> Tr_y L(s_x kron |0><0|).
template <typename Real>
Superoperator<Real> reduce_to_1d(const Superoperator<Real>& gen2d) {
  if (gen2d.factors().size() != 2)
    throw Error(ErrorCode::DimensionMismatch, "reduce_to_1d needs a two-factor generator");
  const Index nx = gen2d.factors()[0];
  const Index ny = gen2d.factors()[1];
  CMatrix<Real> ref = CMatrix<Real>::Zero(ny, ny);
  ref(0, 0) = 1;
  CMatrix<Real> m(nx * nx, nx * nx);
  for (Index col = 0; col < nx; ++col) {
    for (Index row = 0; row < nx; ++row) {
      CMatrix<Real> e = CMatrix<Real>::Zero(nx, nx);
      e(row, col) = 1;
      const CMatrix<Real> full = Eigen::kroneckerProduct(e, ref).eval();
      const CMatrix<Real> red = partial_trace_second<Real>(gen2d.apply(full), nx, ny);
      m.col(row + col * nx) = vec<Real>(red);
    }
  }
  return {std::move(m), {nx}, GeneratorKind::Reduced1D, gen2d.mode(), gen2d.coefficients()};
}

// Right-hand side of the sigma_02 equation evaluated term by term. The sigma_22
// coefficient is sqrt2 (i D- + G/2).
template <typename Real>
Complex<Real> sigma02_rhs(const CMatrix<Real>& s, const GeneratorCoefficients<Real>& g) {
  using C = Complex<Real>;
  if (s.rows() < 5 || s.cols() != s.rows())
    throw Error(ErrorCode::DimensionTooSmall, "sigma02_rhs needs dim >= 5");
  const C i(0, 1);
  const Real r2 = std::sqrt(Real(2));
  const Real r3 = std::sqrt(Real(3));
  const Real G = g.gamma;
  const Real dm = g.delta_minus;
  const Real dp = g.delta_plus;
  return (C(2) * i * C(g.omega_c + dm - dp) - C(G)) * s(0, 2) +
         (C(r3 * G) - i * C(2 * r3 * dm)) * s(0, 4) + C(r3 * G) * s(1, 3) -
         (i * C(r2 * dm) + i * C(r2 * dp) + C(G / r2)) * s(1, 1) +
         C(r2) * (i * C(dm) + C(G / 2)) * s(2, 2) + i * C(r2 * dp) * s(0, 0);
}

template <typename Real>
Complex<Real> sigma02_rhs(const DensityMatrix<Real>& s, const GeneratorCoefficients<Real>& g) {
  return sigma02_rhs<Real>(s.matrix(), g);
}

// The same expression with the opposite sign on the Gamma part of the sigma_22
// coefficient, sqrt2 (i D- - G/2). It does not match the generator.
template <typename Real>
Complex<Real> sigma02_rhs_minus_sign(const CMatrix<Real>& s, const GeneratorCoefficients<Real>& g) {
  return sigma02_rhs<Real>(s, g) - Complex<Real>(std::sqrt(Real(2)) * g.gamma) * s(2, 2);
}

// Nonzero entries as "row,col,re,im".
template <typename Real>
void write_generator_csv(std::ostream& os, const Superoperator<Real>& gen) {
  os << "row,col,re,im\n";
  os.precision(17);
  const auto& m = gen.matrix();
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r)
      if (m(r, c) != Complex<Real>(0))
        os << r << ',' << c << ',' << double(m(r, c).real()) << ',' << double(m(r, c).imag()) << '\n';
}

}  // namespace vacshift
