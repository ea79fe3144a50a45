#include "vacshift/params.hpp"

#include <cmath>
#include <numbers>

#include "vacshift/errors.hpp"

namespace vacshift {

double PhysicalConstants::alpha_from_si() const {
  return e * e / (4 * std::numbers::pi * eps0 * hbar * c);
}

ParticleSpec ParticleSpec::electron(const PhysicalConstants& k) { return {k.m_e, -k.e, 2.00231930436}; }

TrapSpec::TrapSpec(double omega_c, std::optional<double> b, std::optional<double> d_a,
                   std::optional<double> d_c)
    : omega_c_(omega_c), b_field_(b), d_a_(d_a), d_c_(d_c) {
  if (!(omega_c_ > 0) || !std::isfinite(omega_c_))
    throw Error(ErrorCode::InvalidParameter, "trap frequency must be positive");
  if (d_a_ && !(*d_a_ > 0)) throw Error(ErrorCode::InvalidParameter, "d_a must be positive");
  if (d_c_ && !(*d_c_ > 0)) throw Error(ErrorCode::InvalidParameter, "d_c must be positive");
  if (d_a_ && d_c_ && !(*d_a_ > *d_c_)) throw Error(ErrorCode::InvalidParameter, "need d_a > d_c");
}

TrapSpec TrapSpec::from_frequency(double omega_c, std::optional<double> d_a, std::optional<double> d_c) {
  return TrapSpec(omega_c, std::nullopt, d_a, d_c);
}

TrapSpec TrapSpec::from_field(const ParticleSpec& particle, double b_field, std::optional<double> d_a,
                              std::optional<double> d_c) {
  if (!(b_field > 0)) throw Error(ErrorCode::InvalidParameter, "trap field must be positive");
  return TrapSpec(cyclotron_frequency(particle, b_field), b_field, d_a, d_c);
}

CutoffSpec CutoffSpec::explicit_value(double omega_max) {
  if (!(omega_max > 0)) throw Error(ErrorCode::InvalidParameter, "explicit cut-off must be positive");
  return {CutoffKind::Explicit, omega_max};
}

ExperimentConfig ExperimentConfig::sec_reference(CutoffKind kind, ApproximationMode mode) {
  ExperimentConfig c;
  c.particle = ParticleSpec::electron(c.constants);
  c.trap = TrapSpec::from_frequency(9.41e11, 5.0e-6, 15.1e-9);
  c.cutoff = {kind, 0.0};
  c.mode = mode;
  return c;
}

ExperimentConfig ExperimentConfig::with(CutoffKind kind, ApproximationMode m) const {
  ExperimentConfig c = *this;
  c.cutoff.kind = kind;
  c.mode = m;
  return c;
}

ExperimentConfig ExperimentConfig::with_field(double b_field) const {
  ExperimentConfig c = *this;
  c.trap = TrapSpec::from_field(particle, b_field, trap.d_a(), trap.d_c());
  return c;
}

double cyclotron_frequency(const ParticleSpec& particle, double b_field) {
  if (b_field < 0) throw Error(ErrorCode::InvalidParameter, "field magnitude must be >= 0");
  if (!(particle.mass > 0)) throw Error(ErrorCode::InvalidParameter, "mass must be positive");
  return std::abs(particle.charge) * b_field / particle.mass;
}

double lwa_bound(const PhysicalConstants& k, const ParticleSpec& particle, double omega_c) {
  if (omega_c < 0) throw Error(ErrorCode::InvalidParameter, "omega_c must be >= 0");
  return std::sqrt(2 * particle.mass * k.c * k.c * omega_c / k.hbar);
}

double compton_frequency(const PhysicalConstants& k, const ParticleSpec& particle) {
  return particle.mass * k.c * k.c / k.hbar;
}

double raw_cutoff_frequency(const ExperimentConfig& cfg, CutoffKind kind) {
  const auto& k = cfg.constants;
  const double w = cfg.trap.omega_c();
  switch (kind) {
    case CutoffKind::LargestAmplitude:
      if (!cfg.trap.d_a()) throw Error(ErrorCode::MissingParameter, "largest-amplitude cut-off needs d_a");
      return 2 * std::numbers::pi * k.c / *cfg.trap.d_a();
    case CutoffKind::DeBroglie:
      if (!cfg.trap.d_c()) throw Error(ErrorCode::MissingParameter, "de Broglie cut-off needs d_c");
      return k.c * cfg.particle.mass * *cfg.trap.d_c() * w / k.hbar;
    case CutoffKind::ZeroPoint:
      return lwa_bound(k, cfg.particle, w);
    case CutoffKind::Compton:
      return compton_frequency(k, cfg.particle);
    case CutoffKind::Explicit:
      if (!(cfg.cutoff.value > 0)) throw Error(ErrorCode::MissingParameter, "explicit cut-off value missing");
      return cfg.cutoff.value;
  }
  throw Error(ErrorCode::InvalidParameter, "unknown cut-off kind");
}

namespace {
bool is_lwa_kind(CutoffKind kind) {
  return kind == CutoffKind::LargestAmplitude || kind == CutoffKind::DeBroglie || kind == CutoffKind::ZeroPoint;
}
}  // namespace

double cutoff_frequency(const ExperimentConfig& cfg) {
  const double v = raw_cutoff_frequency(cfg, cfg.cutoff.kind);
  if (is_lwa_kind(cfg.cutoff.kind)) return std::min(v, compton_frequency(cfg.constants, cfg.particle));
  return v;
}

double spin_coupling_ratio(const PhysicalConstants& k, const ParticleSpec& particle, double omega_c,
                           double mode_frequency) {
  if (!(mode_frequency > 0)) throw Error(ErrorCode::InvalidParameter, "mode frequency must be positive");
  return k.c * k.c * std::sqrt(particle.mass * omega_c / k.hbar) / mode_frequency;
}

std::vector<Warning> config_warnings(const ExperimentConfig& cfg) {
  std::vector<Warning> out;
  const double bound = lwa_bound(cfg.constants, cfg.particle, cfg.trap.omega_c());
  const double raw = raw_cutoff_frequency(cfg, cfg.cutoff.kind);
  const double compton = compton_frequency(cfg.constants, cfg.particle);
  if (is_lwa_kind(cfg.cutoff.kind) && raw > compton)
    out.push_back({"compton-cap", "cut-off exceeds the Compton frequency and was capped"});
  const double used = cutoff_frequency(cfg);
  if (used > bound * (1 + 1e-12))
    out.push_back({"lwa-violation", "cut-off " + std::to_string(used) + " rad/s exceeds the long-wavelength bound " +
                                        std::to_string(bound) + " rad/s"});
  if (!(used > cfg.trap.omega_c()))
    out.push_back({"cutoff-below-trap", "cut-off does not exceed omega_c; shift formulas are undefined"});
  return out;
}

std::string_view to_string(CutoffKind kind) noexcept {
  switch (kind) {
    case CutoffKind::LargestAmplitude: return "omega1";
    case CutoffKind::DeBroglie: return "omega2";
    case CutoffKind::ZeroPoint: return "omega3";
    case CutoffKind::Compton: return "compton";
    case CutoffKind::Explicit: return "explicit";
  }
  return "unknown";
}

std::string_view to_string(ApproximationMode mode) noexcept {
  return mode == ApproximationMode::WithRWA ? "with-rwa" : "beyond-rwa";
}

CutoffKind parse_cutoff_kind(std::string_view t) {
  if (t == "omega1" || t == "largest-amplitude") return CutoffKind::LargestAmplitude;
  if (t == "omega2" || t == "de-broglie") return CutoffKind::DeBroglie;
  if (t == "omega3" || t == "zero-point") return CutoffKind::ZeroPoint;
  if (t == "compton") return CutoffKind::Compton;
  if (t == "explicit") return CutoffKind::Explicit;
  throw Error(ErrorCode::ConfigError, "unknown cut-off kind '" + std::string(t) + "'");
}

ApproximationMode parse_mode(std::string_view t) {
  if (t == "with-rwa" || t == "rwa") return ApproximationMode::WithRWA;
  if (t == "beyond-rwa" || t == "redfield") return ApproximationMode::BeyondRWA;
  throw Error(ErrorCode::ConfigError, "unknown mode '" + std::string(t) + "'");
}

}  // namespace vacshift
