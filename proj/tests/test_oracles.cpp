#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "vacshift/config_io.hpp"
#include "vacshift/oracles.hpp"

using namespace vacshift;
using namespace vacshift::testing;

namespace {

constexpr double pi = std::numbers::pi;

ExperimentConfig reference() { return load_config("sec-reference"); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidParameter;
}

double largest(const PerturbationShifts& s, auto member) {
  return std::max(std::abs((s.*member).plus), std::abs((s.*member).minus));
}

}  // namespace

TEST_CASE("angular average of cos^2 is one third") {
  // Composite Simpson over the sphere; the azimuth integrates to 2 pi trivially.
  const int n = 2000;
  const double h = pi / n;
  double num = 0, den = 0;
  for (int i = 0; i <= n; ++i) {
    const double th = i * h;
    const double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    num += w * std::cos(th) * std::cos(th) * std::sin(th);
    den += w * std::sin(th);
  }
  CHECK(den / num == doctest::Approx(kAngularFactor).epsilon(1e-10));
}

TEST_CASE("perturbative shift is three times the master-equation shift") {
  const auto cfg = reference();
  for (int k = 0; k < 20; ++k) {
    const double w = log_uniform(1e10, 1e13);
    double W = w * log_uniform(1.01, 1e9);
    if (std::abs(W - 2 * w) < 0.01 * w || std::abs(W - 3 * w) < 0.01 * w) W *= 1.1;
    const double g = damping_rate(cfg.constants, cfg.particle, w);
    const double me = frequency_shift(g, w, W, ApproximationMode::BeyondRWA);
    const double pt = pt_frequency_shift_renormalized(cfg.constants, cfg.particle, w, W);
    CHECK(std::abs(pt / me / kAngularFactor - 1) < 1e-9);
    CHECK(pt > 0);
  }
  for (const auto kind : {CutoffKind::LargestAmplitude, CutoffKind::DeBroglie, CutoffKind::ZeroPoint}) {
    const auto c = cfg.with(kind, ApproximationMode::BeyondRWA);
    const double pt = pt_frequency_shift_renormalized(cfg.constants, cfg.particle, c.trap.omega_c(), cutoff_frequency(c));
    CHECK(std::abs(pt / frequency_shift(c) / kAngularFactor - 1) < 1e-9);
  }
}

TEST_CASE("perturbative shift limits") {
  const auto cfg = reference();
  const double w = cfg.trap.omega_c();
  const double near = pt_frequency_shift_renormalized(cfg.constants, cfg.particle, w, 10 * w);
  const double far = pt_frequency_shift_renormalized(cfg.constants, cfg.particle, w, 1e20 * w);
  CHECK(far > 0);
  CHECK(far < 1e-15 * near);
  CHECK(code_of([&] { pt_frequency_shift_renormalized(cfg.constants, cfg.particle, w, 0.5 * w); }) ==
        ErrorCode::InvalidParameter);
}

TEST_CASE("singular denominators") {
  const auto cfg = reference();
  const double w = cfg.trap.omega_c();
  for (int j = 1; j <= 3; ++j) {
    CHECK(code_of([&] { pt_constants(cfg.constants, cfg.particle, w, j * w); }) == ErrorCode::SingularDenominator);
    CHECK_NOTHROW(pt_constants(cfg.constants, cfg.particle, w, j * w * (1 + 1e-6)));
  }
  CHECK(code_of([&] { pt_frequency_shift_renormalized(cfg.constants, cfg.particle, w, 2 * w); }) ==
        ErrorCode::SingularDenominator);
}

TEST_CASE("perturbative constants") {
  const auto cfg = reference();
  const double w = cfg.trap.omega_c();
  const auto ref = pt_constants(cfg.constants, cfg.particle, w, 1e3 * w);
  CHECK(ref.kappa == doctest::Approx(1.21e-9).epsilon(5e-3));
  CHECK(coupling_alpha(cfg.constants, cfg.particle) == doctest::Approx(cfg.constants.alpha_fs).epsilon(1e-9));

  const auto tiny = pt_constants(cfg.constants, cfg.particle, w, 1e-9 * w);
  for (auto m : {&PerturbationShifts::delta0, &PerturbationShifts::delta1, &PerturbationShifts::delta2a,
                 &PerturbationShifts::delta2b, &PerturbationShifts::delta2c})
    CHECK(largest(tiny, m) < 1e-12 * largest(ref, &PerturbationShifts::delta0));

  const double limit = w / std::sqrt(ref.kappa);
  for (double f : {1e-1, 1e-2, 1e-4}) {
    const auto s = pt_constants(cfg.constants, cfg.particle, w, f * limit);
    const double d0 = largest(s, &PerturbationShifts::delta0);
    for (auto m : {&PerturbationShifts::delta1, &PerturbationShifts::delta2a, &PerturbationShifts::delta2b,
                   &PerturbationShifts::delta2c})
      CHECK(largest(s, m) < 1e-2 * d0);
  }

  // The linear part of the upper zeroth-order constant is the free-particle term.
  const double W = 100 * w;
  const auto s = pt_constants(cfg.constants, cfg.particle, w, W);
  const double a = coupling_alpha(cfg.constants, cfg.particle);
  const double lin = s.delta0.plus + 2 * a * s.kappa / pi * w * std::log1p(W / w);
  const auto fp = free_particle_shift(cfg.constants, cfg.particle, W);
  CHECK(lin == doctest::Approx(kAngularFactor * fp.delta_e_lin * w / 2).epsilon(1e-12));
  CHECK(fp.delta_e_fp / 2 == doctest::Approx(fp.delta_e_lin).epsilon(1e-12));
}

TEST_CASE("perturbative level shifts") {
  PerturbationShifts s;
  CHECK(pt_energy_shift(0, s) == 0.0);
  CHECK(pt_energy_shift(7, s) == 0.0);
  s.delta0 = {uniform(-1, 1), uniform(-1, 1)};
  s.delta1 = {uniform(-1, 1), uniform(-1, 1)};
  s.delta2a = {uniform(-1, 1), uniform(-1, 1)};
  s.delta2b = {uniform(-1, 1), uniform(-1, 1)};
  s.delta2c = {uniform(-1, 1), uniform(-1, 1)};
  CHECK(pt_energy_shift(0, s) == doctest::Approx(-s.delta0.plus - 2 * s.delta1.plus - 6 * s.delta2a.plus +
                                                 s.delta2b.plus - s.delta2c.plus));
  PerturbationShifts only0;
  only0.delta0 = s.delta0;
  for (long n : {0L, 1L, 5L, 40L})
    CHECK(pt_energy_shift(n + 1, only0) - pt_energy_shift(n, only0) ==
          doctest::Approx(s.delta0.minus - s.delta0.plus));
  CHECK(code_of([&] { pt_energy_shift(-1, s); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("discrete bath construction") {
  for (auto profile : {CouplingProfile::Flat, CouplingProfile::InverseFrequency}) {
    const auto b = make_linear_bath(64, 0.2, 5.0, 1.0, 5e-3, profile);
    CHECK(b.mode_frequencies.size() == 64);
    CHECK(b.couplings.size() == 64);
    CHECK(b.mode_frequencies.front() == 0.2);
    CHECK(b.mode_frequencies.back() == doctest::Approx(5.0));
    CHECK(discrete_golden_rule_rate(b, 1.0) == doctest::Approx(5e-3).epsilon(1e-12));
    if (profile == CouplingProfile::InverseFrequency)
      CHECK(b.couplings[0] * b.couplings[0] * 0.2 == doctest::Approx(b.couplings[63] * b.couplings[63] * 5.0));
    else
      CHECK(b.couplings[0] == b.couplings[63]);
  }
  CHECK(code_of([] { make_linear_bath(1, 0.2, 5.0, 1.0, 5e-3); }) == ErrorCode::InvalidParameter);

  BathModel b = make_linear_bath(64, 0.2, 5.0, 1.0, 5e-3);
  CHECK(bath_dimension(b) == 66);
  b.excitation_cap = 2;
  CHECK(bath_dimension(b) == 1 + 65 + 64 + 64 * 63 / 2);
  BathModel big = make_linear_bath(40, 0.2, 5.0, 1.0, 5e-3);
  big.photons_per_mode = 1;
  big.excitation_cap = 0;
  CHECK(bath_dimension(big) > kBathDimensionGuard);
  CHECK(code_of([&] { bath_brute_force(big, 1.0, 10.0); }) == ErrorCode::GuardExceeded);
}

TEST_CASE("discrete bath reproduces the golden-rule decay") {
  const auto b = make_linear_bath(64, 0.2, 5.0, 1.0, 5e-3);
  const double spacing = b.mode_frequencies[1] - b.mode_frequencies[0];
  const auto fit = bath_brute_force(b, 1.0, 0.75 * 2 * pi / spacing);
  CHECK(fit.dimension <= kBathDimensionGuard);
  CHECK(fit.max_norm_deviation < 1e-10);
  CHECK(std::abs(fit.gamma_fit / fit.gamma_expected - 1) < 0.10);
  CHECK(fit.gamma_expected == doctest::Approx(discrete_golden_rule_rate(b, 1.0)));
  CHECK(fit.times.size() == fit.excited_population.size());
}

TEST_CASE("detuned mode shift and resonant failure") {
  BathModel d;
  d.mode_frequencies = {2.0};
  d.couplings = {0.05};
  d.particle_levels = 4;
  d.photons_per_mode = 2;
  d.excitation_cap = 0;
  d.counter_rotating = true;
  CHECK(bath_dimension(d) == 12);
  BathFitOptions opt;
  opt.fit_decay = false;
  opt.samples = 20000;
  const auto fit = bath_brute_force(d, 1.0, 2000.0, opt);
  CHECK(fit.max_norm_deviation < 1e-10);
  CHECK(fit.shift_expected == doctest::Approx(discrete_second_order_shift(d, 1.0)));
  CHECK(std::abs(fit.shift_fit / fit.shift_expected - 1) < 0.05);

  BathModel r;
  r.mode_frequencies = {1.0};
  r.couplings = {0.01};
  CHECK(code_of([&] { bath_brute_force(r, 1.0, 2000.0); }) == ErrorCode::FitFailure);
}
