#include "vacshift/config_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "vacshift/errors.hpp"

namespace vacshift {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(std::string_view key, std::string_view v) {
  double out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw Error(ErrorCode::ConfigError, "value for " + std::string(key) + " is not a number: '" + std::string(v) + "'");
  return out;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::ConfigError, "line " + std::to_string(line_no) + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty() || value.empty())
      throw Error(ErrorCode::ConfigError, "line " + std::to_string(line_no) + ": empty key or value");
    if (!kv.emplace(key, value).second) throw Error(ErrorCode::ConfigError, "duplicate key " + key);
  }

  static const char* const known[] = {"particle.mass_kg", "particle.charge_C", "trap.omega_c_rad_s",
                                      "trap.b_field_T",  "trap.d_a_m",        "trap.d_c_m",
                                      "cutoff.kind",     "cutoff.value_rad_s", "mode"};
  for (const auto& [k, v] : kv) {
    bool ok = false;
    for (const char* name : known) ok = ok || k == name;
    if (!ok) throw Error(ErrorCode::ConfigError, "unknown key " + k);
  }
  auto num = [&](const char* key) -> std::optional<double> {
    const auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return parse_number(key, it->second);
  };

  ExperimentConfig c;
  c.particle = ParticleSpec::electron(c.constants);
  if (auto m = num("particle.mass_kg")) c.particle.mass = *m;
  if (auto q = num("particle.charge_C")) c.particle.charge = *q;
  if (!(c.particle.mass > 0)) throw Error(ErrorCode::ConfigError, "particle.mass_kg must be positive");

  const auto w = num("trap.omega_c_rad_s");
  const auto b = num("trap.b_field_T");
  const auto da = num("trap.d_a_m");
  const auto dc = num("trap.d_c_m");
  if (!w && !b) throw Error(ErrorCode::MissingParameter, "need trap.omega_c_rad_s or trap.b_field_T");
  if (b) {
    c.trap = TrapSpec::from_field(c.particle, *b, da, dc);
    if (w && std::abs(*w - c.trap.omega_c()) > 1e-9 * *w)
      throw Error(ErrorCode::ConfigError, "trap.omega_c_rad_s disagrees with trap.b_field_T");
  } else {
    c.trap = TrapSpec::from_frequency(*w, da, dc);
  }

  if (const auto it = kv.find("cutoff.kind"); it != kv.end()) c.cutoff.kind = parse_cutoff_kind(it->second);
  if (auto v = num("cutoff.value_rad_s")) {
    if (c.cutoff.kind != CutoffKind::Explicit)
      throw Error(ErrorCode::ConfigError, "cutoff.value_rad_s is only valid with cutoff.kind = explicit");
    c.cutoff = CutoffSpec::explicit_value(*v);
  } else if (c.cutoff.kind == CutoffKind::Explicit) {
    throw Error(ErrorCode::MissingParameter, "cutoff.kind = explicit needs cutoff.value_rad_s");
  }
  if (const auto it = kv.find("mode"); it != kv.end()) c.mode = parse_mode(it->second);
  return c;
}

ExperimentConfig load_config(const std::string& path_or_name) {
  if (path_or_name == kReferenceConfigName) return ExperimentConfig::sec_reference();
  std::ifstream in(path_or_name);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open config file " + path_or_name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_config(const ExperimentConfig& c) {
  std::ostringstream os;
  os.precision(17);
  os << "particle.mass_kg = " << c.particle.mass << '\n';
  os << "particle.charge_C = " << c.particle.charge << '\n';
  if (c.trap.b_field())
    os << "trap.b_field_T = " << *c.trap.b_field() << '\n';
  else
    os << "trap.omega_c_rad_s = " << c.trap.omega_c() << '\n';
  if (c.trap.d_a()) os << "trap.d_a_m = " << *c.trap.d_a() << '\n';
  if (c.trap.d_c()) os << "trap.d_c_m = " << *c.trap.d_c() << '\n';
  os << "cutoff.kind = " << to_string(c.cutoff.kind) << '\n';
  if (c.cutoff.kind == CutoffKind::Explicit) os << "cutoff.value_rad_s = " << c.cutoff.value << '\n';
  os << "mode = " << to_string(c.mode) << '\n';
  return os.str();
}

}  // namespace vacshift
