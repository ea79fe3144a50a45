#include <cmath>
#include <numbers>

#include "vacshift/errors.hpp"
#include "vacshift/oracles.hpp"

namespace vacshift {

namespace {

constexpr double pi = std::numbers::pi;

void check_resonances(double w, double W) {
  if (!(w > 0) || !(W > 0)) throw Error(ErrorCode::InvalidParameter, "frequencies must be positive");
  for (int j = 1; j <= 3; ++j)
    if (std::abs(W - j * w) <= 1e-12 * W)
      throw Error(ErrorCode::SingularDenominator, "cut-off sits on the resonance " + std::to_string(j) + " omega_c");
}

// ln|(j w + s W)/(j w)|
double log_term(int j, double s, double w, double W) { return std::log(std::abs((j * w + s * W) / (j * w))); }

}  // namespace

double coupling_alpha(const PhysicalConstants& k, const ParticleSpec& p) {
  return p.charge * p.charge / (4 * pi * k.eps0 * k.hbar * k.c);
}

PerturbationShifts pt_constants(const PhysicalConstants& k, const ParticleSpec& p, double w, double W) {
  check_resonances(w, W);
  const double a = coupling_alpha(k, p);
  const double kap = kappa(k, p, w);
  const double W2 = W * W, W3 = W2 * W, W4 = W3 * W, W5 = W4 * W;
  const double w2 = w * w, w3 = w2 * w, w4 = w3 * w;

  PerturbationShifts out;
  out.kappa = kap;
  for (const double s : {1.0, -1.0}) {
    const double d0 = 2 * a * kap / pi * (-w * log_term(1, s, w, W) + s * W);
    const double d1 =
        a * kap * kap / pi * (-8 * w * log_term(2, s, w, W) + s * 4 * W - W2 / w + s * W3 / (3 * w2));
    const double d2a = a * kap * kap * kap / (8 * pi) *
                       (-243 * w * log_term(3, s, w, W) + s * 81 * W - 27 * W2 / (2 * w) + s * 3 * W3 / w2 -
                        3 * W4 / (4 * w3) + s * W5 / (5 * w4));
    const double d2b = a * kap * kap * kap / (8 * pi) *
                       (-w * log_term(1, s, w, W) + s * W - W2 / (2 * w) + s * W3 / (3 * w2) - W4 / (4 * w3) +
                        s * W5 / (5 * w4));
    const double d2c = a * kap * kap / pi * (-w * log_term(1, s, w, W) + s * W - W2 / (2 * w) + s * W3 / (3 * w2));
    auto put = [s](ShiftPair& pair, double v) { (s > 0 ? pair.plus : pair.minus) = v; };
    put(out.delta0, d0);
    put(out.delta1, d1);
    put(out.delta2a, d2a);
    put(out.delta2b, d2b);
    put(out.delta2c, d2c);
  }
  return out;
}

double pt_energy_shift(long n, const PerturbationShifts& s) {
  if (n < 0) throw Error(ErrorCode::InvalidParameter, "level index must be >= 0");
  const double x = double(n);
  return x * s.delta0.minus - (x + 1) * s.delta0.plus + x * (x - 1) * s.delta1.minus -
         (x + 1) * (x + 2) * s.delta1.plus + x * (x - 1) * (x - 2) * s.delta2a.minus -
         (x + 1) * (x + 2) * (x + 3) * s.delta2a.plus + x * x * x * s.delta2b.minus -
         (x * x * x + 3 * x * x + 3 * x - 1) * s.delta2b.plus + x * x * s.delta2c.minus -
         (x * x + 2 * x + 1) * s.delta2c.plus;
}

double pt_frequency_shift_renormalized(const PhysicalConstants& k, const ParticleSpec& p, double w, double W) {
  check_resonances(w, W);
  if (W < w) throw Error(ErrorCode::InvalidParameter, "cut-off must exceed omega_c");
  // Delta0- - Delta0+ without the +-2 alpha kappa W / pi terms; the log ratio
  // is written as log1p to keep precision when W >> w.
  const double a = coupling_alpha(k, p);
  return -2 * a * kappa(k, p, w) * w / pi * std::log1p(-2 * w / (w + W));
}

}  // namespace vacshift
