#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "vacshift/params.hpp"

using namespace vacshift;
using vacshift::testing::log_uniform;

namespace {
const PhysicalConstants K{};
}

TEST_CASE("physical constants are self-consistent") {
  CHECK(std::abs(K.alpha_from_si() / K.alpha_fs - 1) < 1e-9);
  for (double v : {K.hbar, K.c, K.eps0, K.e, K.m_e, K.k_B, K.alpha_fs}) CHECK(v > 0);
}

TEST_CASE("trap construction validates its fields") {
  CHECK_THROWS_AS(TrapSpec::from_frequency(0.0), Error);
  CHECK_THROWS_AS(TrapSpec::from_frequency(-1.0), Error);
  CHECK_THROWS_AS(TrapSpec::from_frequency(1e11, 1e-8, 1e-6), Error);
  CHECK_THROWS_AS(TrapSpec::from_frequency(1e11, 1e-6, 1e-6), Error);
  CHECK_THROWS_AS(TrapSpec::from_frequency(1e11, 1e-6, -1e-9), Error);
  try {
    TrapSpec::from_frequency(0.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidParameter);
  }
  const auto p = ParticleSpec::electron();
  const auto t = TrapSpec::from_field(p, 5.36, 5e-6, 15e-9);
  CHECK(t.omega_c() == doctest::Approx(K.e * 5.36 / K.m_e).epsilon(1e-14));
  CHECK(t.omega_c() == doctest::Approx(9.42e11).epsilon(1e-3));
  REQUIRE(t.b_field());
  CHECK(*t.b_field() == 5.36);
}

TEST_CASE("cyclotron frequency scaling") {
  const auto e = ParticleSpec::electron();
  CHECK(cyclotron_frequency(e, 0.0) == 0.0);
  for (int k = 0; k < 50; ++k) {
    const double b = log_uniform(1e-3, 1e2);
    const double s = log_uniform(0.1, 10);
    ParticleSpec heavy = e;
    heavy.mass *= s;
    CHECK(cyclotron_frequency(e, s * b) == doctest::Approx(s * cyclotron_frequency(e, b)).epsilon(1e-14));
    CHECK(cyclotron_frequency(heavy, b) == doctest::Approx(cyclotron_frequency(e, b) / s).epsilon(1e-14));
  }
  ParticleSpec positron = e;
  positron.charge = -e.charge;
  CHECK(cyclotron_frequency(positron, 2.0) == cyclotron_frequency(e, 2.0));
}

TEST_CASE("cut-off frequencies for the reference config") {
  const auto cfg = ExperimentConfig::sec_reference();
  const double w = cfg.trap.omega_c();
  const double m = cfg.particle.mass;
  const double c = K.c;
  const double W1 = raw_cutoff_frequency(cfg, CutoffKind::LargestAmplitude);
  const double W2 = raw_cutoff_frequency(cfg, CutoffKind::DeBroglie);
  const double W3 = raw_cutoff_frequency(cfg, CutoffKind::ZeroPoint);
  const double Wc = raw_cutoff_frequency(cfg, CutoffKind::Compton);
  CHECK(W1 == doctest::Approx(2 * std::numbers::pi * c / 5.0e-6).epsilon(1e-14));
  CHECK(W1 == doctest::Approx(3.77e14).epsilon(1e-3));
  CHECK(W2 == doctest::Approx(c * m * 15.1e-9 * w / K.hbar).epsilon(1e-14));
  CHECK(W3 == doctest::Approx(std::sqrt(2 * m * c * c * w / K.hbar)).epsilon(1e-14));
  CHECK(W3 == doctest::Approx(3.82e16).epsilon(2e-3));
  CHECK(Wc == doctest::Approx(7.76e20).epsilon(1e-3));
  CHECK(W2 < W3);
  CHECK(W3 < Wc);
  ExperimentConfig e = cfg;
  e.cutoff = CutoffSpec::explicit_value(1.5e13);
  CHECK(cutoff_frequency(e) == 1.5e13);
}

TEST_CASE("zero-point cut-off equals the LWA bound") {
  const auto e = ParticleSpec::electron();
  for (int k = 0; k < 100; ++k) {
    ExperimentConfig cfg;
    cfg.particle = e;
    cfg.particle.mass *= log_uniform(1, 2000);
    cfg.trap = TrapSpec::from_frequency(log_uniform(1e6, 1e13));
    cfg.cutoff.kind = CutoffKind::ZeroPoint;
    CHECK(raw_cutoff_frequency(cfg, CutoffKind::ZeroPoint) == lwa_bound(K, cfg.particle, cfg.trap.omega_c()));
    CHECK(cutoff_frequency(cfg) == lwa_bound(K, cfg.particle, cfg.trap.omega_c()));
  }
}

TEST_CASE("LWA bound") {
  const auto e = ParticleSpec::electron();
  const auto cfg = ExperimentConfig::sec_reference();
  CHECK(lwa_bound(K, e, cfg.trap.omega_c()) / (2 * std::numbers::pi) == doctest::Approx(6.1e15).epsilon(0.02));
  CHECK(lwa_bound(K, e, 4e11) == doctest::Approx(2 * lwa_bound(K, e, 1e11)).epsilon(1e-14));
  CHECK(lwa_bound(K, e, 1e-30) < 1e-3);
}

TEST_CASE("missing geometry is reported") {
  ExperimentConfig cfg;
  cfg.particle = ParticleSpec::electron();
  cfg.trap = TrapSpec::from_frequency(1e11);
  for (auto kind : {CutoffKind::LargestAmplitude, CutoffKind::DeBroglie}) {
    try {
      raw_cutoff_frequency(cfg, kind);
      FAIL("expected MissingParameter");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::MissingParameter);
    }
  }
  CHECK_NOTHROW(raw_cutoff_frequency(cfg, CutoffKind::ZeroPoint));
}

TEST_CASE("Compton cap and warnings") {
  ExperimentConfig cfg = ExperimentConfig::sec_reference(CutoffKind::Compton);
  auto w = config_warnings(cfg);
  bool violation = false;
  for (const auto& x : w) violation = violation || x.code == "lwa-violation";
  CHECK(violation);
  CHECK(cutoff_frequency(cfg) == doctest::Approx(7.76e20).epsilon(1e-3));

  // An LWA cut-off that would exceed the Compton frequency is capped.
  ExperimentConfig big = ExperimentConfig::sec_reference(CutoffKind::DeBroglie);
  big.trap = TrapSpec::from_frequency(big.trap.omega_c(), 1.0, 0.5);
  CHECK(raw_cutoff_frequency(big, CutoffKind::DeBroglie) > compton_frequency(K, big.particle));
  CHECK(cutoff_frequency(big) == compton_frequency(K, big.particle));
  bool capped = false;
  for (const auto& x : config_warnings(big)) capped = capped || x.code == "compton-cap";
  CHECK(capped);

  CHECK(config_warnings(ExperimentConfig::sec_reference()).empty());
}

TEST_CASE("spin coupling ratio") {
  const auto cfg = ExperimentConfig::sec_reference();
  const auto& p = cfg.particle;
  const double w = cfg.trap.omega_c();
  const double W3 = cutoff_frequency(cfg);
  const double expected = K.c * K.c * std::sqrt(p.mass * w / K.hbar) / W3;
  CHECK(spin_coupling_ratio(K, p, w, W3) == doctest::Approx(expected).epsilon(1e-14));
  // c^2 sqrt(m w / hbar) is of order 1e24-1e25 s^-1 for these parameters.
  const double scale = spin_coupling_ratio(K, p, w, 1.0);
  CHECK(scale > 1e24);
  CHECK(scale < 1e26);
  CHECK(spin_coupling_ratio(K, p, w, W3) > 1e7);
  double prev = INFINITY;
  for (double f = 1e10; f < 1e20; f *= 10) {
    const double r = spin_coupling_ratio(K, p, w, f);
    CHECK(r < prev);
    prev = r;
  }
}

TEST_CASE("config modifiers keep geometry") {
  const auto cfg = ExperimentConfig::sec_reference();
  const auto moved = cfg.with_field(3.0);
  CHECK(moved.trap.omega_c() == doctest::Approx(cyclotron_frequency(cfg.particle, 3.0)));
  CHECK(*moved.trap.d_a() == *cfg.trap.d_a());
  CHECK(*moved.trap.d_c() == *cfg.trap.d_c());
  const auto w = cfg.with(CutoffKind::DeBroglie, ApproximationMode::WithRWA);
  CHECK(w.cutoff.kind == CutoffKind::DeBroglie);
  CHECK(w.mode == ApproximationMode::WithRWA);
}

TEST_CASE("enum parsing round-trips") {
  for (auto k : {CutoffKind::LargestAmplitude, CutoffKind::DeBroglie, CutoffKind::ZeroPoint, CutoffKind::Compton,
                 CutoffKind::Explicit})
    CHECK(parse_cutoff_kind(to_string(k)) == k);
  for (auto m : {ApproximationMode::WithRWA, ApproximationMode::BeyondRWA}) CHECK(parse_mode(to_string(m)) == m);
  CHECK(parse_cutoff_kind("de-broglie") == CutoffKind::DeBroglie);
  CHECK(parse_mode("redfield") == ApproximationMode::BeyondRWA);
  CHECK_THROWS_AS(parse_cutoff_kind("omega4"), Error);
  CHECK_THROWS_AS(parse_mode("sideways"), Error);
}
