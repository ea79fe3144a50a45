#include "vacshift/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numbers>
#include <cmath>
#include <ostream>

namespace vacshift {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_table1_csv(std::ostream& os, const Table1Report& t) {
  os << "mode,cutoff,omega_max_rad_s,relative_shift\n";
  for (std::size_t i = 0; i < t.kModes.size(); ++i)
    for (std::size_t j = 0; j < t.kCutoffs.size(); ++j)
      os << to_string(t.kModes[i]) << ',' << to_string(t.kCutoffs[j]) << ',' << format_number(t.cutoffs[j]) << ','
         << format_number(t.values[i][j]) << '\n';
}

void write_table1_text(std::ostream& os, const Table1Report& t) {
  char line[160];
  std::snprintf(line, sizeof line, "%-12s %12s %12s %12s\n", "", "omega1", "omega2", "omega3");
  os << line;
  for (std::size_t i = 0; i < t.kModes.size(); ++i) {
    std::snprintf(line, sizeof line, "%-12s %12.2e %12.2e %12.2e\n", std::string(to_string(t.kModes[i])).c_str(),
                  t.values[i][0], t.values[i][1], t.values[i][2]);
    os << line;
  }
  for (const auto& n : t.notes) os << "# " << n << '\n';
}

void write_sweep_csv(std::ostream& os, const SweepResult& s) {
  os << "b_tesla,omega_c_rad_s,delta_omega_rad_s,local_exponent\n";
  for (std::size_t k = 0; k < s.b_values.size(); ++k)
    os << format_number(s.b_values[k]) << ',' << format_number(s.omega_c_values[k]) << ','
       << format_number(s.delta_omega[k]) << ',' << format_number(s.local_exponents[k]) << '\n';
}

void write_series_csv(std::ostream& os, const ObservableSeries& s) {
  os << "time,value\n";
  for (std::size_t k = 0; k < s.times.size(); ++k)
    os << format_number(s.times[k]) << ',' << format_number(s.values[k]) << '\n';
}

void write_evolution_csv(std::ostream& os, const EvolutionRecord<double>& rec,
                         std::span<const ObservableSeries> obs) {
  os << "time,trace_dev,herm_dev,min_eig,guard_pop";
  for (const auto& o : obs) os << ',' << o.label;
  os << '\n';
  for (std::size_t k = 0; k < rec.times.size(); ++k) {
    const auto& d = rec.diagnostics[k];
    os << format_number(rec.times[k]) << ',' << format_number(d.trace_dev) << ',' << format_number(d.herm_dev) << ','
       << format_number(d.min_eig) << ',' << format_number(d.guard_population);
    for (const auto& o : obs) os << ',' << format_number(o.values.at(k));
    os << '\n';
  }
}

void write_svg_plot(std::ostream& os, std::span<const double> x, std::span<const PlotLine> lines,
                    const std::string& title, const std::string& x_label, bool log_x, bool log_y) {
  constexpr double W = 720, H = 440, L = 70, R = 20, T = 40, B = 50;
  auto tx = [&](double v) { return log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return log_y ? std::log10(std::abs(v)) : v; };
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (double v : x) {
    x0 = std::min(x0, tx(v));
    x1 = std::max(x1, tx(v));
  }
  for (const auto& l : lines)
    for (double v : l.y)
      if (std::isfinite(ty(v))) {
        y0 = std::min(y0, ty(v));
        y1 = std::max(y1, ty(v));
      }
  if (!(x1 > x0)) x1 = x0 + 1;
  if (!(y1 > y0)) y1 = y0 + 1;
  auto px = [&](double v) { return L + (tx(v) - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double v) { return H - B - (ty(v) - y0) / (y1 - y0) * (H - T - B); };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"12\">" << x_label
     << (log_x ? " (log10)" : "") << "</text>\n";
  os << "<text x=\"" << L << "\" y=\"" << H - B + 16 << "\" font-size=\"10\">" << format_number(x0) << "</text>\n";
  os << "<text x=\"" << W - R << "\" y=\"" << H - B + 16 << "\" text-anchor=\"end\" font-size=\"10\">"
     << format_number(x1) << "</text>\n";
  os << "<text x=\"4\" y=\"" << H - B << "\" font-size=\"10\">" << format_number(y0) << "</text>\n";
  os << "<text x=\"4\" y=\"" << T + 10 << "\" font-size=\"10\">" << format_number(y1) << "</text>\n";
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const auto& l = lines[li];
    const char* col = colors[li % 5];
    os << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < x.size() && k < l.y.size(); ++k)
      if (std::isfinite(ty(l.y[k]))) os << px(x[k]) << ',' << py(l.y[k]) << ' ';
    os << "\"/>\n";
    os << "<text x=\"" << W - R - 4 << "\" y=\"" << T + 14 * (li + 1) << "\" text-anchor=\"end\" font-size=\"11\" fill=\""
       << col << "\">" << l.label << "</text>\n";
  }
  os << "</svg>\n";
}

void write_validity_report(std::ostream& os, const ValidityReport& r) {
  os << "t_max_s: " << format_number(r.t_max) << '\n';
  os << "gamma_per_s: " << format_number(r.gamma) << '\n';
  os << "delta_minus_ren_per_s: " << format_number(r.delta_minus_ren) << '\n';
  os << "cutoff_rad_s: " << format_number(r.cutoff) << '\n';
  os << "lwa_bound_rad_s: " << format_number(r.lwa_bound) << '\n';
  os << "lwa_bound_hz: " << format_number(r.lwa_bound / (2 * std::numbers::pi)) << '\n';
  os << "lwa_ok: " << (r.lwa_ok ? "true" : "false") << '\n';
  os << "spin_ratio: " << format_number(r.spin_ratio) << '\n';
  os << "negligible: " << (r.spin_negligible ? "true" : "false") << '\n';
  for (const auto& w : r.warnings) os << "warning[" << w.code << "]: " << w.message << '\n';
}

}  // namespace vacshift
