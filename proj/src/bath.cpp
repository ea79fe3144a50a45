#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "vacshift/errors.hpp"
#include "vacshift/oracles.hpp"
#include "vacshift/spectral.hpp"

namespace vacshift {

namespace {

constexpr double two_pi = 2 * std::numbers::pi;

using Occupation = std::vector<std::uint8_t>;  // [particle level, photons in mode 0..M-1]

void validate(const BathModel& b) {
  if (b.mode_frequencies.empty()) throw Error(ErrorCode::InvalidParameter, "bath needs at least one mode");
  if (b.couplings.size() != b.mode_frequencies.size())
    throw Error(ErrorCode::DimensionMismatch, "one coupling per mode is required");
  if (b.particle_levels < 2) throw Error(ErrorCode::DimensionTooSmall, "particle needs at least two levels");
  if (b.photons_per_mode < 1) throw Error(ErrorCode::InvalidParameter, "photons_per_mode must be >= 1");
  if (b.particle_levels > 255 || b.photons_per_mode > 255)
    throw Error(ErrorCode::GuardExceeded, "occupation limits above 255 are not supported");
}

std::size_t saturating_add(std::size_t a, std::size_t b, std::size_t cap) { return std::min(cap, a + b); }

void enumerate(const BathModel& b, Occupation& cur, std::size_t mode, int used, std::vector<Occupation>& out) {
  const std::size_t m = b.mode_frequencies.size();
  if (mode == m) {
    out.push_back(cur);
    return;
  }
  for (int o = 0; o <= b.photons_per_mode; ++o) {
    if (b.excitation_cap > 0 && used + o > b.excitation_cap) break;
    cur[mode + 1] = std::uint8_t(o);
    enumerate(b, cur, mode + 1, used + o, out);
  }
  cur[mode + 1] = 0;
}

// Interpolates f(mode index) at omega_c on the mode grid.
template <typename F>
double at_omega(const BathModel& b, double w, F f) {
  const auto& m = b.mode_frequencies;
  for (std::size_t k = 0; k + 1 < m.size(); ++k) {
    if (m[k] <= w && w <= m[k + 1]) {
      const double s = (w - m[k]) / (m[k + 1] - m[k]);
      return (1 - s) * f(k) + s * f(k + 1);
    }
  }
  throw Error(ErrorCode::InvalidParameter, "omega_c lies outside the bath band");
}

}  // namespace

BathModel make_linear_bath(std::size_t n_modes, double lo, double hi, double omega_c, double gamma_target,
                           CouplingProfile profile) {
  if (n_modes < 2 || !(hi > lo) || !(lo > 0)) throw Error(ErrorCode::InvalidParameter, "invalid bath band");
  BathModel b;
  const double spacing = (hi - lo) / double(n_modes - 1);
  for (std::size_t k = 0; k < n_modes; ++k) b.mode_frequencies.push_back(lo + spacing * double(k));
  std::vector<double> shape(n_modes, 1.0);
  if (profile == CouplingProfile::InverseFrequency)
    for (std::size_t k = 0; k < n_modes; ++k) shape[k] = omega_c / b.mode_frequencies[k];
  b.couplings.assign(n_modes, 1.0);
  const double shape_at = at_omega(b, omega_c, [&](std::size_t k) { return shape[k]; });
  const double scale = gamma_target * spacing / (two_pi * shape_at);
  for (std::size_t k = 0; k < n_modes; ++k) b.couplings[k] = std::sqrt(scale * shape[k]);
  return b;
}

std::size_t bath_dimension(const BathModel& b) {
  validate(b);
  const std::size_t cap = kBathDimensionGuard + 1;
  if (b.excitation_cap <= 0) {
    std::size_t d = std::size_t(b.particle_levels);
    for (std::size_t k = 0; k < b.mode_frequencies.size(); ++k) {
      d = std::min(cap, d * std::size_t(b.photons_per_mode + 1));
      if (d >= cap) return cap;
    }
    return d;
  }
  // ways[e]: photon configurations carrying e excitations
  std::vector<std::size_t> ways(std::size_t(b.excitation_cap) + 1, 0);
  ways[0] = 1;
  for (std::size_t k = 0; k < b.mode_frequencies.size(); ++k) {
    std::vector<std::size_t> next(ways.size(), 0);
    for (std::size_t e = 0; e < ways.size(); ++e)
      for (int o = 0; o <= b.photons_per_mode && e + std::size_t(o) < ways.size(); ++o)
        next[e + std::size_t(o)] = saturating_add(next[e + std::size_t(o)], ways[e], cap);
    ways = std::move(next);
  }
  std::size_t d = 0;
  for (int n = 0; n < b.particle_levels && n <= b.excitation_cap; ++n)
    for (int e = 0; e + n <= b.excitation_cap; ++e) d = saturating_add(d, ways[std::size_t(e)], cap);
  return d;
}

double discrete_golden_rule_rate(const BathModel& b, double w) {
  validate(b);
  const auto& m = b.mode_frequencies;
  const double g2 = at_omega(b, w, [&](std::size_t k) { return b.couplings[k] * b.couplings[k]; });
  const double spacing = at_omega(b, w, [&](std::size_t k) {
    return k + 1 < m.size() ? m[k + 1] - m[k] : m[k] - m[k - 1];
  });
  return two_pi * g2 / spacing;
}

double discrete_second_order_shift(const BathModel& b, double w) {
  validate(b);
  // Intermediate states reachable from |n, vac> with one photon; only those
  // inside the truncated basis contribute.
  const int P = b.particle_levels;
  const int cap = b.excitation_cap;
  auto allowed = [&](int level, int photons) {
    return level >= 0 && level < P && (cap <= 0 || level + photons <= cap);
  };
  auto level_shift = [&](int n) {
    double s = 0;
    for (std::size_t k = 0; k < b.mode_frequencies.size(); ++k) {
      const double g2 = b.couplings[k] * b.couplings[k];
      const double wk = b.mode_frequencies[k];
      if (n >= 1 && allowed(n - 1, 1)) s += g2 * n / (w - wk);                      // b a+
      if (b.counter_rotating && allowed(n + 1, 1)) s -= g2 * (n + 1) / (w + wk);   // b+ a+
    }
    return s;
  };
  return level_shift(1) - level_shift(0);
}

BathFit bath_brute_force(const BathModel& b, double w, double duration, const BathFitOptions& opt) {
  validate(b);
  const std::size_t dim = bath_dimension(b);
  if (dim > kBathDimensionGuard)
    throw Error(ErrorCode::GuardExceeded, "bath Hilbert space exceeds 2^16 states");
  if (!(duration > 0) || opt.samples < 16) throw Error(ErrorCode::InvalidParameter, "invalid fit window");

  const std::size_t m = b.mode_frequencies.size();
  std::vector<Occupation> basis;
  basis.reserve(dim);
  for (int n = 0; n < b.particle_levels; ++n) {
    if (b.excitation_cap > 0 && n > b.excitation_cap) break;
    Occupation cur(m + 1, 0);
    cur[0] = std::uint8_t(n);
    enumerate(b, cur, 0, n, basis);
  }
  std::map<Occupation, Eigen::Index> index;
  for (std::size_t s = 0; s < basis.size(); ++s) index.emplace(basis[s], Eigen::Index(s));
  const auto d = Eigen::Index(basis.size());

  using C = std::complex<double>;
  const C i(0, 1);
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(d, d);
  auto add = [&](const Occupation& to, Eigen::Index from, C v) {
    if (const auto it = index.find(to); it != index.end()) H(it->second, from) += v;
  };
  for (Eigen::Index s = 0; s < d; ++s) {
    const Occupation& st = basis[std::size_t(s)];
    double e = w * st[0];
    for (std::size_t k = 0; k < m; ++k) e += b.mode_frequencies[k] * st[k + 1];
    H(s, s) = e;
    const int n = st[0];
    for (std::size_t k = 0; k < m; ++k) {
      const double g = b.couplings[k];
      const int o = st[k + 1];
      Occupation t = st;
      // i g b+ a
      if (o > 0 && n + 1 < b.particle_levels) {
        t[0] = std::uint8_t(n + 1);
        t[k + 1] = std::uint8_t(o - 1);
        add(t, s, i * g * std::sqrt(double(n + 1) * o));
        t = st;
      }
      // -i g b a+
      if (n > 0 && o < b.photons_per_mode) {
        t[0] = std::uint8_t(n - 1);
        t[k + 1] = std::uint8_t(o + 1);
        add(t, s, -i * g * std::sqrt(double(n) * (o + 1)));
        t = st;
      }
      if (!b.counter_rotating) continue;
      // i g b+ a+
      if (n + 1 < b.particle_levels && o < b.photons_per_mode) {
        t[0] = std::uint8_t(n + 1);
        t[k + 1] = std::uint8_t(o + 1);
        add(t, s, i * g * std::sqrt(double(n + 1) * (o + 1)));
        t = st;
      }
      // -i g b a
      if (n > 0 && o > 0) {
        t[0] = std::uint8_t(n - 1);
        t[k + 1] = std::uint8_t(o - 1);
        add(t, s, -i * g * std::sqrt(double(n) * o));
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::ToleranceFailure, "bath diagonalisation failed");
  const Eigen::VectorXd& E = es.eigenvalues();
  const Eigen::MatrixXcd& V = es.eigenvectors();

  const Occupation vac0(m + 1, 0);
  Occupation vac1 = vac0;
  vac1[0] = 1;
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(d);
  psi0[index.at(vac0)] = 1 / std::sqrt(2.0);
  psi0[index.at(vac1)] = 1 / std::sqrt(2.0);
  const Eigen::VectorXcd c0 = V.adjoint() * psi0;

  // b|s> lands on `lowered[s]` with amplitude sqrt(n)
  std::vector<Eigen::Index> lowered(std::size_t(d), -1);
  Eigen::VectorXd level(d);
  for (Eigen::Index s = 0; s < d; ++s) {
    const Occupation& st = basis[std::size_t(s)];
    level[s] = st[0];
    if (st[0] > 0) {
      Occupation t = st;
      t[0] = std::uint8_t(st[0] - 1);
      if (const auto it = index.find(t); it != index.end()) lowered[std::size_t(s)] = it->second;
    }
  }

  BathFit out;
  out.dimension = std::size_t(d);
  // A single mode or a frequency outside the band has no golden-rule rate,
  // and a resonant mode has no second-order shift.
  const auto& wk_all = b.mode_frequencies;
  const bool in_band = wk_all.size() >= 2 && w >= wk_all.front() && w <= wk_all.back();
  const bool resonant = std::ranges::any_of(wk_all, [&](double wk) { return std::abs(wk - w) < 1e-12 * w; });
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out.gamma_expected = b.counter_rotating ? 0.0 : (in_band ? discrete_golden_rule_rate(b, w) : nan);
  out.shift_expected = resonant ? nan : discrete_second_order_shift(b, w);
  std::vector<C> bexp;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const double t = duration * double(k) / double(opt.samples - 1);
    const Eigen::VectorXcd phases = (-i * E.cast<C>() * t).array().exp();
    const Eigen::VectorXcd psi = V * (phases.cwiseProduct(c0));
    out.max_norm_deviation = std::max(out.max_norm_deviation, std::abs(psi.norm() - 1));
    double pop = 0;
    C bv = 0;
    for (Eigen::Index s = 0; s < d; ++s) {
      pop += std::norm(psi[s]) * level[s];
      if (const Eigen::Index l = lowered[std::size_t(s)]; l >= 0) bv += std::conj(psi[l]) * std::sqrt(level[s]) * psi[s];
    }
    out.times.push_back(t);
    out.excited_population.push_back(pop);
    bexp.push_back(bv);
  }

  const auto skip = std::size_t(opt.skip_fraction * double(opt.samples));
  std::span<const double> tw(out.times.data() + skip, out.times.size() - skip);
  const PhaseFit rot = fit_rotation(tw, std::span<const C>(bexp.data() + skip, bexp.size() - skip));
  out.shift_fit = rot.omega - w;

  if (opt.fit_decay) {
    std::vector<double> logp;
    for (std::size_t k = skip; k < out.excited_population.size(); ++k) {
      if (!(out.excited_population[k] > 0))
        throw Error(ErrorCode::FitFailure, "excited population reached zero; no exponential decay");
      logp.push_back(std::log(out.excited_population[k]));
    }
    const LineFit f = fit_line(tw, logp);
    out.gamma_fit = -f.slope;
    out.log_residual = f.rms_residual;
    if (f.rms_residual > opt.max_log_residual || !(out.gamma_fit > 0))
      throw Error(ErrorCode::FitFailure, "excited population is not exponential (rms log residual " +
                                              std::to_string(f.rms_residual) + ")");
  }
  return out;
}

}  // namespace vacshift
