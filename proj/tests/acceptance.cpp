// One line per criterion; exits non-zero if any line fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "test_support.hpp"
#include "vacshift/config_io.hpp"
#include "vacshift/observables.hpp"
#include "vacshift/oracles.hpp"
#include "vacshift/report_io.hpp"
#include "vacshift/spectral.hpp"
#include "vacshift/sweeps.hpp"

using namespace vacshift;
using namespace vacshift::testing;

namespace {

using Clock = std::chrono::steady_clock;
constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Detail {
 public:
  // Records a sub-check; the criterion passes only if all of them do.
  void check(bool ok, const std::string& what) {
    pass_ = pass_ && ok;
    if (!os_.str().empty()) os_ << "; ";
    os_ << what << (ok ? "" : " [fail]");
  }
  Outcome done() const { return {pass_, os_.str()}; }

 private:
  bool pass_ = true;
  std::ostringstream os_;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool same_two_figures(double a, double b) {
  char x[32], y[32];
  std::snprintf(x, sizeof x, "%.1e", a);
  std::snprintf(y, sizeof y, "%.1e", b);
  return std::string(x) == y;
}

ExperimentConfig field_reference() {
  const ExperimentConfig c = ExperimentConfig::sec_reference();
  return c.with_field(c.trap.omega_c() * c.particle.mass / std::abs(c.particle.charge));
}

Outcome table_one() {
  Detail d;
  const auto t0 = Clock::now();
  const auto t = table1(load_config("sec-reference"));
  const double elapsed = seconds_since(t0);
  const double target[2][3] = {{-1.1e-11, -2.0e-11, -2.0e-11}, {9.4e-15, 9.6e-17, 9.2e-17}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      d.check(same_two_figures(t.values[i][j], target[i][j]), num(t.values[i][j]) + " vs " + num(target[i][j]));
  d.check(elapsed < 1, "runtime " + num(elapsed) + " s");
  return d.done();
}

Outcome validity_time() {
  Detail d;
  const auto t0 = Clock::now();
  const double t_max = validity_report(ExperimentConfig::sec_reference()).t_max;
  const double elapsed = seconds_since(t0);
  d.check(std::abs(t_max / 0.04 - 1) <= 0.05, "T_max " + num(t_max) + " s vs 0.04 s (rel " + num(t_max / 0.04 - 1) + ")");
  d.check(elapsed < 1, "runtime " + num(elapsed) + " s");
  return d.done();
}

Outcome lwa() {
  Detail d;
  const auto r = validity_report(ExperimentConfig::sec_reference());
  const double hz = r.lwa_bound / (2 * pi);
  d.check(std::abs(hz / 6.1e15 - 1) <= 0.02, "bound " + num(hz) + " Hz vs 6.1e15");
  return d.done();
}

Outcome exponents() {
  Detail d;
  const auto t0 = Clock::now();
  const auto cfg = field_reference();
  const std::pair<CutoffKind, double> beyond[] = {
      {CutoffKind::LargestAmplitude, 3.0}, {CutoffKind::DeBroglie, 2.0}, {CutoffKind::ZeroPoint, 2.5}};
  for (const auto& [kind, p] : beyond) {
    const auto s = bfield_sweep(cfg, 1, 10, 64, ApproximationMode::BeyondRWA, kind);
    d.check(std::abs(s.midpoint_exponent - p) <= 0.01,
            std::string(to_string(kind)) + " " + num(s.midpoint_exponent) + " vs " + num(p));
  }
  double worst = 0;
  for (const auto kind : {CutoffKind::LargestAmplitude, CutoffKind::DeBroglie, CutoffKind::ZeroPoint}) {
    const auto s = bfield_sweep(cfg, 1, 10, 64, ApproximationMode::WithRWA, kind);
    for (std::size_t k = 1; k + 1 < s.b_values.size(); ++k)
      worst = std::max(worst,
                       std::abs(s.local_exponents[k] / analytic_exponent(cfg, s.b_values[k], s.mode, kind) - 1));
  }
  d.check(worst <= 0.01, "RWA slopes vs analytic derivative max rel " + num(worst));
  const double elapsed = seconds_since(t0);
  d.check(elapsed < 1, "runtime " + num(elapsed) + " s");
  return d.done();
}

Outcome generators() {
  Detail d;
  double row = 0;
  for (int k = 0; k < 100; ++k) {
    const GeneratorCoefficients<double> g{1.0, log_uniform(1e-3, 1e-1), uniform(-0.05, 0.05), uniform(-0.05, 0.05)};
    const Index n = 6 + k % 10;
    const CM s = random_state(n);
    const auto gen = build_redfield_generator(FockSpace<double>(n, 1.0), g);
    row = std::max(row, std::abs(sigma02_rhs<double>(s, g) - gen.apply(s)(0, 2)));
  }
  d.check(row < 1e-12, "sigma_02 row " + num(row));

  double xp = 0;
  for (int k = 0; k < 10; ++k) {
    const double w = log_uniform(0.5, 3), m = log_uniform(0.2, 5), hb = log_uniform(0.3, 3);
    const GeneratorCoefficients<double> g{w, w * log_uniform(1e-3, 1e-1), w * uniform(-0.05, 0.05),
                                          w * uniform(-0.05, 0.05)};
    const FockSpace<double> s(12, w, m, hb);
    const auto a = build_xp_generator(s, g).matrix();
    const auto b = build_redfield_generator(s, g).matrix();
    xp = std::max(xp, max_abs(a - b) / max_abs(b));
  }
  d.check(xp < 1e-10, "x-p vs ladder form " + num(xp));

  double zero = 0;
  for (int k = 0; k < 10; ++k) {
    const FockSpace<double> s(10, 1.0);
    const GeneratorCoefficients<double> g{1.0, log_uniform(1e-3, 1e-1), 0.0, 0.0};
    zero = std::max(zero, max_abs(build_redfield_generator(s, g).matrix() - build_lindblad_generator(s, g).matrix()));
  }
  d.check(zero == 0.0, "Redfield with zero shifts vs Lindblad max entry difference " + num(zero));
  return d.done();
}

Outcome dynamics() {
  Detail d;
  const double G = 1e-2;
  const auto rates = scaled_rate_set(G, 3.0);
  const FockSpace<double> s(20, 1.0);
  const auto gen = build_redfield_generator(s, rates);
  const auto times = uniform_times(0.0, 6 / G, 8192);
  const auto rec = integrate(gen, make_state(Coherent{{1.0, 0.0}}, s), std::span<const double>(times));
  const auto x = observable_series(rec, observable_matrix(Observable::Position, s), "x");
  const double x0 = x.values.front();

  const auto fit = fit_phase_slope(x.times, x.values);
  double env = 0;
  for (std::size_t k = 0; k < fit.times.size(); ++k)
    env = std::max(env, std::abs(fit.envelope[k] / (x0 * std::exp(-G * fit.times[k] / 2)) - 1));
  d.check(env < 0.01, "envelope max rel error " + num(env) + " over Gamma t in [" + num(G * fit.times.front()) + ", " +
                          num(G * fit.times.back()) + "]");

  const auto sol = make_damped_solution(x0, G, 1.0, rates.delta_omega);
  const auto ana = analytic_x_trajectory(sol, times);
  double pointwise = 0;
  for (std::size_t k = 0; k < times.size(); ++k)
    pointwise = std::max(pointwise, std::abs(x.values[k] - ana.cosine.values[k]) / (x0 * std::exp(-G * times[k] / 2)));
  d.check(pointwise < 0.01, "damped cosine max rel deviation " + num(pointwise));

  const double shift = fit.omega - 1.0;
  const double miss = std::abs(shift / rates.delta_omega - 1);
  d.check(miss < 0.05, "fitted shift " + num(shift) + " vs " + num(rates.delta_omega) + " (rel " + num(miss) + ")");

  const FockSpace<double> small(6, 1.0);
  const auto lin = build_lindblad_generator(small, scaled_rate_set(G, 3.0, ApproximationMode::WithRWA));
  IntegratorOptions tight;
  tight.rtol = 1e-12;
  tight.atol = 1e-14;
  const std::vector<double> tl = {0.0, 1 / G};
  const auto rl = integrate(lin, make_state(Fock{1}, small), std::span<const double>(tl), tight);
  const double p1 = rl.states.back()(1, 1).real();
  d.check(std::abs(p1 - std::exp(-1.0)) < 1e-8, "Lindblad |1> at Gamma t = 1 off by " + num(std::abs(p1 - std::exp(-1.0))));
  return d.done();
}

Outcome witness() {
  Detail d;
  const FockSpace<double> s(20, 1.0);
  const auto rho0 = make_state(Thermal{0.5}, s);
  const auto t = uniform_times(0.0, 10.0, 201);
  const CM X = observable_matrix(Observable::Witness, s);
  const IntegratorOptions opt;
  const double tol = opt.rtol;
  auto peak = [&](const Superoperator<double>& gen) {
    double m = 0;
    for (double v : observable_series(integrate(gen, rho0, std::span<const double>(t), opt), X, "X").values)
      m = std::max(m, std::abs(v));
    return m;
  };
  const double red = peak(build_redfield_generator(s, scaled_rate_set(1e-2, 3.0)));
  const double lin = peak(build_lindblad_generator(s, scaled_rate_set(1e-2, 3.0, ApproximationMode::WithRWA)));
  d.check(red > 10 * tol, "Redfield peak |<X>| " + num(red));
  d.check(lin <= tol, "Lindblad peak |<X>| " + num(lin) + " (tolerance " + num(tol) + ")");
  return d.done();
}

Outcome oracles() {
  Detail d;
  const auto cfg = ExperimentConfig::sec_reference();
  double ratio = 0;
  for (int k = 0; k < 20; ++k) {
    const double w = log_uniform(1e10, 1e13);
    double W = w * log_uniform(1.01, 1e9);
    if (std::abs(W - 2 * w) < 0.01 * w || std::abs(W - 3 * w) < 0.01 * w) W *= 1.1;
    const double me = frequency_shift(damping_rate(cfg.constants, cfg.particle, w), w, W, ApproximationMode::BeyondRWA);
    ratio = std::max(ratio, std::abs(pt_frequency_shift_renormalized(cfg.constants, cfg.particle, w, W) / me /
                                         kAngularFactor - 1));
  }
  d.check(ratio < 1e-9, "PT/ME ratio vs " + num(kAngularFactor) + " max rel " + num(ratio));
  double fp = 0;
  for (int k = 0; k < 20; ++k) {
    const auto f = free_particle_shift(cfg.constants, cfg.particle, log_uniform(1e12, 1e21));
    fp = std::max(fp, std::abs(f.delta_e_fp / 2 / f.delta_e_lin - 1));
  }
  d.check(fp < 1e-12, "free-particle identity max rel " + num(fp));
  return d.done();
}

Outcome bath() {
  Detail d;
  const auto t0 = Clock::now();
  const auto b = make_linear_bath(64, 0.2, 5.0, 1.0, 5e-3);
  const double spacing = b.mode_frequencies[1] - b.mode_frequencies[0];
  const auto fit = bath_brute_force(b, 1.0, 0.75 * 2 * pi / spacing);
  const double elapsed = seconds_since(t0);
  const double rel = std::abs(fit.gamma_fit / fit.gamma_expected - 1);
  d.check(rel < 0.10, "Gamma fit " + num(fit.gamma_fit) + " vs " + num(fit.gamma_expected) + " (rel " + num(rel) + ")");
  d.check(fit.dimension <= kBathDimensionGuard, "dimension " + std::to_string(fit.dimension));
  d.check(fit.max_norm_deviation < 1e-10, "norm deviation " + num(fit.max_norm_deviation));
  d.check(elapsed < 60, "runtime " + num(elapsed) + " s");
  return d.done();
}

Outcome structure() {
  Detail d;
  const GeneratorCoefficients<double> g{1.0, 2e-2, -0.03, 0.01};
  const FockSpace<double> s(8, 1.0), small(3, 1.0);
  const auto g2 = build_2d_generator(small, small, g);
  const std::pair<const char*, Superoperator<double>> gens[] = {
      {"redfield", build_redfield_generator(s, g)}, {"lindblad", build_lindblad_generator(s, g)},
      {"x-p", build_xp_generator(s, g)},            {"2d", g2},
      {"2d-reduced", reduce_to_1d(g2)}};
  for (const auto& [name, gen] : gens) {
    double tr = 0, herm = 0;
    for (int k = 0; k < 100; ++k) {
      const CM out = gen.apply(random_hermitian(gen.dim()));
      tr = std::max(tr, std::abs(out.trace()));
      herm = std::max(herm, hermiticity_deviation(out));
    }
    d.check(tr < 1e-10 && herm < 1e-10, std::string(name) + " trace " + num(tr) + " herm " + num(herm));
  }
  double flip = 0;
  bool sign_ok = true;
  for (const RateSet& r : {make_rate_set(ExperimentConfig::sec_reference()), scaled_rate_set(1e-2, 3.0)}) {
    const double t_max = validity_window(r).t_max;
    flip = std::max(flip, std::abs(gaussian_positivity_margin(r, t_max)));
    sign_ok = sign_ok && gaussian_positivity_check(r, t_max * (1 - 1e-6)) &&
              !gaussian_positivity_check(r, t_max * (1 + 1e-6));
  }
  d.check(flip < 1e-9 && sign_ok, "positivity margin at T_max " + num(flip));
  return d.done();
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"relative-shift grid", table_one},
      {"validity time T_max", validity_time},
      {"long-wavelength bound", lwa},
      {"field-scaling exponents", exponents},
      {"generator equivalences", generators},
      {"dynamics against the damped-oscillator solution", dynamics},
      {"coherence witness contrast", witness},
      {"perturbative and free-particle oracles", oracles},
      {"discretised bath decay", bath},
      {"trace, Hermiticity and the Gaussian boundary", structure},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
