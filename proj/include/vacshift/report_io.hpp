#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vacshift/evolution.hpp"
#include "vacshift/observables.hpp"
#include "vacshift/sweeps.hpp"

namespace vacshift {

// Shortest round-trip representation.
std::string format_number(double v);

void write_table1_csv(std::ostream& os, const Table1Report& t);
void write_table1_text(std::ostream& os, const Table1Report& t);
void write_sweep_csv(std::ostream& os, const SweepResult& s);
void write_series_csv(std::ostream& os, const ObservableSeries& s);

// time,trace_dev,herm_dev,min_eig,guard_pop,<observables...>
void write_evolution_csv(std::ostream& os, const EvolutionRecord<double>& rec,
                         std::span<const ObservableSeries> observables);

struct PlotLine {
  std::string label;
  std::vector<double> y;
};

void write_svg_plot(std::ostream& os, std::span<const double> x, std::span<const PlotLine> lines,
                    const std::string& title, const std::string& x_label, bool log_x = false,
                    bool log_y = false);

void write_validity_report(std::ostream& os, const ValidityReport& r);

}  // namespace vacshift
