// vacshift: command-line front end for the rate formulas, sweeps, dynamics and oracles.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "vacshift/config_io.hpp"
#include "vacshift/evolution.hpp"
#include "vacshift/observables.hpp"
#include "vacshift/oracles.hpp"
#include "vacshift/report_io.hpp"
#include "vacshift/sweeps.hpp"

using namespace vacshift;

namespace {

struct Common {
  std::string config = std::string(kReferenceConfigName);
  std::string out;
  std::string format = "csv";
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorCode::ConfigError, "cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "config file or 'sec-reference'");
  app->add_option("--out", c.out, "output path (default stdout)");
  app->add_option("--format", c.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
}

StateSpec parse_state(const std::string& s) {
  const auto colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  const double v = colon == std::string::npos ? 0.0 : std::stod(s.substr(colon + 1));
  if (kind == "fock") return Fock{Index(v)};
  if (kind == "coherent") return Coherent{{v, 0.0}};
  if (kind == "thermal") return Thermal{v};
  throw Error(ErrorCode::ConfigError, "state must be fock:N, coherent:A or thermal:NBAR");
}

void run_rates(const Common& c, const std::string& cutoff, const std::string& mode) {
  ExperimentConfig cfg = load_config(c.config);
  if (!cutoff.empty()) cfg.cutoff.kind = parse_cutoff_kind(cutoff);
  if (!mode.empty()) cfg.mode = parse_mode(mode);
  const RateSet r = make_rate_set(cfg);
  const FreeParticleShift fp = free_particle_shift(cfg.constants, cfg.particle, r.omega_max);
  Output out(c.out);
  auto& os = out.stream();
  os << "quantity,value\n";
  auto row = [&](const char* k, double v) { os << k << ',' << format_number(v) << '\n'; };
  row("omega_c_rad_s", r.omega_c);
  row("omega_max_rad_s", r.omega_max);
  row("gamma_per_s", r.gamma);
  row("delta_plus_raw_per_s", r.delta_plus_raw);
  row("delta_minus_raw_per_s", r.delta_minus_raw);
  row("delta_plus_ren_per_s", r.delta_plus_ren);
  row("delta_minus_ren_per_s", r.delta_minus_ren);
  row("delta_omega_per_s", r.delta_omega);
  row("relative_shift", r.delta_omega / r.omega_c);
  row("total_frequency_rad_s", total_frequency(r.omega_c, r.delta_omega));
  row("kappa", kappa(cfg.constants, cfg.particle, r.omega_c));
  row("free_particle_shift", fp.delta_e_fp);
  row("free_particle_shift_linear", fp.delta_e_lin);
  for (const auto& w : config_warnings(cfg)) std::cerr << "warning[" << w.code << "]: " << w.message << '\n';
}

void run_table1(const Common& c, bool text) {
  const Table1Report t = table1(load_config(c.config));
  Output out(c.out);
  if (c.format == "svg") {
    const std::vector<double> x = {1, 2, 3};
    std::vector<PlotLine> lines;
    for (std::size_t i = 0; i < t.kModes.size(); ++i)
      lines.push_back({std::string(to_string(t.kModes[i])), {t.values[i].begin(), t.values[i].end()}});
    write_svg_plot(out.stream(), x, lines, "|relative shift| per cut-off", "cut-off (1, 2, 3)", false, true);
  } else if (text) {
    write_table1_text(out.stream(), t);
  } else {
    write_table1_csv(out.stream(), t);
  }
}

void run_sweep(const Common& c, const std::string& cutoff, const std::string& mode, double bmin, double bmax,
               std::size_t points) {
  const SweepResult s = bfield_sweep(load_config(c.config), bmin, bmax, points, parse_mode(mode),
                                     parse_cutoff_kind(cutoff));
  Output out(c.out);
  if (c.format == "svg") {
    const std::vector<PlotLine> lines = {{"|delta omega| (rad/s)", s.delta_omega}};
    write_svg_plot(out.stream(), s.b_values, lines, "shift vs field, slope " + format_number(s.midpoint_exponent),
                   "B (T)", true, true);
  } else {
    write_sweep_csv(out.stream(), s);
  }
  std::cerr << "midpoint exponent at B = " << s.midpoint_b << " T: " << s.midpoint_exponent << '\n';
}

struct EvolveArgs {
  std::string generator = "redfield";
  int dim = 20;
  double gamma_ratio = 1e-2;
  double cutoff_ratio = 3.0;
  std::string state = "coherent:1";
  double t_end = 60;
  std::size_t samples = 601;
  double rtol = 1e-10;
  double atol = 1e-12;
  std::string export_generator;
};

int run_evolve(const Common& c, const EvolveArgs& a) {
  const bool redfield = a.generator == "redfield";
  const RateSet r = scaled_rate_set(a.gamma_ratio, a.cutoff_ratio,
                                    redfield ? ApproximationMode::BeyondRWA : ApproximationMode::WithRWA);
  const FockSpace<double> space(a.dim, 1.0);
  const auto gen = redfield ? build_redfield_generator(space, r) : build_lindblad_generator(space, r);
  if (!a.export_generator.empty()) {
    std::ofstream g(a.export_generator);
    if (!g) throw Error(ErrorCode::ConfigError, "cannot open " + a.export_generator);
    write_generator_csv(g, gen);
  }
  const auto rho0 = make_state(parse_state(a.state), space);
  const auto times = uniform_times(0.0, a.t_end, a.samples);
  IntegratorOptions opt;
  opt.rtol = a.rtol;
  opt.atol = a.atol;
  const auto rec = integrate(gen, rho0, std::span<const double>(times), opt);
  std::vector<ObservableSeries> obs;
  for (auto [o, name] : {std::pair{Observable::Position, "x"}, {Observable::Momentum, "p"},
                         {Observable::Number, "n"}, {Observable::Witness, "X"}})
    obs.push_back(observable_series(rec, observable_matrix(o, space), name));
  Output out(c.out);
  if (c.format == "svg") {
    std::vector<PlotLine> lines;
    for (const auto& s : obs) lines.push_back({s.label, s.values});
    write_svg_plot(out.stream(), rec.times, lines, a.generator + " evolution (units of 1/omega_c)", "omega_c t");
  } else {
    write_evolution_csv(out.stream(), rec, obs);
  }
  if (rec.first_positivity_breach)
    std::cerr << "warning: positivity breach first at t = " << *rec.first_positivity_breach << '\n';
  if (rec.first_guard_overflow) {
    std::cerr << "error: guard-band population exceeded at t = " << *rec.first_guard_overflow << '\n';
    return 2;
  }
  return 0;
}

int run_witness(const Common& c, int dim, double n_bar, double gamma_ratio, double cutoff_ratio, double t_end,
                std::size_t samples) {
  const FockSpace<double> space(dim, 1.0);
  const auto rho0 = make_state(Thermal{n_bar}, space);
  const auto times = uniform_times(0.0, t_end, samples);
  const auto X = observable_matrix(Observable::Witness, space);
  const auto red = build_redfield_generator(space, scaled_rate_set(gamma_ratio, cutoff_ratio));
  const auto lin =
      build_lindblad_generator(space, scaled_rate_set(gamma_ratio, cutoff_ratio, ApproximationMode::WithRWA));
  const auto rr = integrate(red, rho0, std::span<const double>(times));
  const auto rl = integrate(lin, rho0, std::span<const double>(times));
  const auto sr = observable_series(rr, X, "witness_redfield");
  const auto sl = observable_series(rl, X, "witness_lindblad");
  Output out(c.out);
  if (c.format == "svg") {
    const std::vector<PlotLine> lines = {{sr.label, sr.values}, {sl.label, sl.values}};
    write_svg_plot(out.stream(), sr.times, lines, "<X> from a thermal state", "omega_c t");
  } else {
    out.stream() << "time,witness_redfield,witness_lindblad\n";
    for (std::size_t k = 0; k < sr.times.size(); ++k)
      out.stream() << format_number(sr.times[k]) << ',' << format_number(sr.values[k]) << ','
                   << format_number(sl.values[k]) << '\n';
  }
  return (rr.first_guard_overflow || rl.first_guard_overflow) ? 2 : 0;
}

void run_validate(const Common& c) {
  const ValidityReport r = validity_report(load_config(c.config));
  Output out(c.out);
  write_validity_report(out.stream(), r);
}

struct OracleRow {
  std::string name;
  double expected, fitted;
  double tolerance;
};

int write_oracle_rows(std::ostream& os, const std::vector<OracleRow>& rows) {
  os << "case,expected,fitted,rel_error,pass\n";
  bool all = true;
  for (const auto& r : rows) {
    const double rel = r.expected != 0 ? std::abs(r.fitted - r.expected) / std::abs(r.expected) : std::abs(r.fitted);
    const bool pass = rel <= r.tolerance;
    all = all && pass;
    os << r.name << ',' << format_number(r.expected) << ',' << format_number(r.fitted) << ',' << format_number(rel)
       << ',' << (pass ? "pass" : "fail") << '\n';
  }
  return all ? 0 : 2;
}

int run_pt_compare(const Common& c) {
  const ExperimentConfig cfg = load_config(c.config);
  const double w = cfg.trap.omega_c();
  std::vector<OracleRow> rows;
  for (const CutoffKind k : {CutoffKind::LargestAmplitude, CutoffKind::DeBroglie, CutoffKind::ZeroPoint,
                             CutoffKind::Compton}) {
    const ExperimentConfig ck = cfg.with(k, ApproximationMode::BeyondRWA);
    const double W = cutoff_frequency(ck);
    const double me = frequency_shift(ck);
    const double pt = pt_frequency_shift_renormalized(cfg.constants, cfg.particle, w, W);
    rows.push_back({"ratio_" + std::string(to_string(k)), kAngularFactor, pt / me, 1e-9});
  }
  const auto fp = free_particle_shift(cfg.constants, cfg.particle, cutoff_frequency(cfg));
  rows.push_back({"free_particle_half_over_linear", 1.0, fp.delta_e_fp / 2 / fp.delta_e_lin, 1e-12});
  Output out(c.out);
  return write_oracle_rows(out.stream(), rows);
}

int run_bath_oracle(const Common& c, std::size_t modes, double gamma_ratio) {
  std::vector<OracleRow> rows;
  const BathModel bath = make_linear_bath(modes, 0.2, 5.0, 1.0, gamma_ratio);
  const double spacing = bath.mode_frequencies[1] - bath.mode_frequencies[0];
  const double duration = 0.75 * 2 * std::numbers::pi / spacing;
  const BathFit fit = bath_brute_force(bath, 1.0, duration);
  rows.push_back({"multimode_decay_rate", fit.gamma_expected, fit.gamma_fit, 0.10});

  BathModel detuned;
  detuned.mode_frequencies = {2.0};
  detuned.couplings = {0.05};
  detuned.particle_levels = 4;
  detuned.photons_per_mode = 2;
  detuned.excitation_cap = 0;
  detuned.counter_rotating = true;
  BathFitOptions no_decay;
  no_decay.fit_decay = false;
  no_decay.samples = 20000;
  const BathFit d = bath_brute_force(detuned, 1.0, 2000.0, no_decay);
  rows.push_back({"detuned_mode_shift", d.shift_expected, d.shift_fit, 0.05});

  BathModel resonant;
  resonant.mode_frequencies = {1.0};
  resonant.couplings = {0.01};
  double failed = 0;
  try {
    bath_brute_force(resonant, 1.0, 2000.0);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::FitFailure) failed = 1;
  }
  rows.push_back({"resonant_mode_fit_failure", 1.0, failed, 0.0});
  Output out(c.out);
  return write_oracle_rows(out.stream(), rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vacuum-induced shift and coherence toolkit for a trapped charged particle"};
  app.require_subcommand(1);
  Common common;

  std::string cutoff, mode;
  auto* rates = app.add_subcommand("rates", "closed-form rates and shifts for a config");
  add_common(rates, common);
  rates->add_option("--cutoff", cutoff, "omega1|omega2|omega3|compton");
  rates->add_option("--mode", mode, "with-rwa|beyond-rwa");

  bool text = false;
  auto* t1 = app.add_subcommand("table1", "relative shift for three cut-offs, with and without RWA");
  add_common(t1, common);
  t1->add_flag("--text", text, "aligned text grid instead of CSV");

  std::string sw_cutoff = "omega3", sw_mode = "beyond-rwa";
  double bmin = 1, bmax = 10;
  std::size_t points = 64;
  auto* sweep = app.add_subcommand("sweep-b", "frequency shift versus magnetic field");
  add_common(sweep, common);
  sweep->add_option("--cutoff", sw_cutoff, "omega1|omega2|omega3|compton");
  sweep->add_option("--mode", sw_mode, "with-rwa|beyond-rwa");
  sweep->add_option("--b-min", bmin, "lowest field (T)");
  sweep->add_option("--b-max", bmax, "highest field (T)");
  sweep->add_option("--points", points, "number of fields (>= 16)");

  EvolveArgs ev;
  auto* evolve = app.add_subcommand("evolve", "integrate a scaled-regime master equation (omega_c = 1)");
  add_common(evolve, common);
  evolve->add_option("--generator", ev.generator, "redfield|lindblad")->check(CLI::IsMember({"redfield", "lindblad"}));
  evolve->add_option("--dim", ev.dim, "Fock levels");
  evolve->add_option("--gamma-ratio", ev.gamma_ratio, "Gamma / omega_c");
  evolve->add_option("--cutoff-ratio", ev.cutoff_ratio, "Omega_max / omega_c");
  evolve->add_option("--state", ev.state, "fock:N | coherent:ALPHA | thermal:NBAR");
  evolve->add_option("--t-end", ev.t_end, "final time in units of 1/omega_c");
  evolve->add_option("--samples", ev.samples, "output samples");
  evolve->add_option("--rtol", ev.rtol);
  evolve->add_option("--atol", ev.atol);
  evolve->add_option("--export-generator", ev.export_generator, "write the generator as row,col,re,im");

  int w_dim = 20;
  double w_nbar = 0.5, w_gamma = 1e-2, w_cut = 3.0, w_t = 10;
  std::size_t w_samples = 201;
  auto* witness = app.add_subcommand("witness", "<X> from a thermal state under both generators");
  add_common(witness, common);
  witness->add_option("--dim", w_dim);
  witness->add_option("--n-bar", w_nbar, "thermal occupation");
  witness->add_option("--gamma-ratio", w_gamma);
  witness->add_option("--cutoff-ratio", w_cut);
  witness->add_option("--t-end", w_t);
  witness->add_option("--samples", w_samples);

  auto* validate = app.add_subcommand("validate", "validity window, LWA bound and spin-coupling ratio");
  add_common(validate, common);

  auto* pt = app.add_subcommand("pt-compare", "perturbation theory against the master-equation shift");
  add_common(pt, common);

  std::size_t b_modes = 64;
  double b_gamma = 5e-3;
  auto* bath = app.add_subcommand("bath-oracle", "exact discretised-bath checks");
  add_common(bath, common);
  bath->add_option("--modes", b_modes);
  bath->add_option("--gamma-ratio", b_gamma);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }

  try {
    if (*rates) run_rates(common, cutoff, mode);
    if (*t1) run_table1(common, text);
    if (*sweep) run_sweep(common, sw_cutoff, sw_mode, bmin, bmax, points);
    if (*evolve) return run_evolve(common, ev);
    if (*witness) return run_witness(common, w_dim, w_nbar, w_gamma, w_cut, w_t, w_samples);
    if (*validate) run_validate(common);
    if (*pt) return run_pt_compare(common);
    if (*bath) return run_bath_oracle(common, b_modes, b_gamma);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_numerical_guard() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
