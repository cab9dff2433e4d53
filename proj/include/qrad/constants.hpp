#pragma once

// Physical constants (SI). Exact values where the SI defines them,
// CODATA 2018 for the measured vacuum permeability. eps0 and eta0 are
// derived from mu0 and c0 so the three stay mutually consistent to
// rounding precision.

namespace qrad {

inline constexpr double c0       = 299792458.0;        // speed of light in vacuum [m/s]
inline constexpr double mu0      = 1.25663706212e-6;   // vacuum permeability [H/m]
inline constexpr double eps0     = 1.0 / (mu0 * c0 * c0);  // vacuum permittivity [F/m]
inline constexpr double eta0     = mu0 * c0;           // wave impedance of free space [ohm], ~376.73
inline constexpr double h_planck = 6.62607015e-34;     // Planck constant [J s]
inline constexpr double k_boltz  = 1.380649e-23;       // Boltzmann constant [J/K]
inline constexpr double e_charge = 1.602176634e-19;    // elementary charge [C]

inline constexpr double pi = 3.14159265358979323846;

}  // namespace qrad
