#pragma once

namespace vacshift {

// CODATA 2018, SI.
struct PhysicalConstants {
  double hbar = 1.054571817e-34;     // J s
  double c = 299792458.0;            // m/s
  double eps0 = 8.8541878128e-12;    // F/m
  double e = 1.602176634e-19;        // C
  double m_e = 9.1093837015e-31;     // kg
  double k_B = 1.380649e-23;         // J/K
  double alpha_fs = 7.2973525693e-3;

  static PhysicalConstants codata2018() { return {}; }

  // e^2 / (4 pi eps0 hbar c), for checking alpha_fs.
  double alpha_from_si() const;
};

}  // namespace vacshift
