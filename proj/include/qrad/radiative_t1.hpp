#pragma once

#include "qrad/core.hpp"

// Radiative T1 limit of a qubit whose island/gap structure acts as a small
// magnetic-dipole aperture. The wire-dual loop carries radiation resistance
//   Re[Z_w] = (8/3) pi^5 sqrt(eps_eff) eta0 (r / lambda_med)^4
// and the qubit decay time follows from the Babinet-mapped radiation
// conductance: T1 = eta^2 C / (4 Re[Z_w]).

namespace qrad {

struct CircularIsland {
    double r_island_m = 0.0;
    double gap_w_m = 0.0;
};

struct ArbitraryIsland {
    double area_m2 = 0.0;
};

enum class IslandKind { circular, arbitrary };

struct T1Config {
    double c_qubit_f = 0.0;  // qubit shunt capacitance [F]
    double f01_hz = 0.0;     // qubit transition frequency
    double eps_eff = 1.0;
    IslandKind kind = IslandKind::circular;
    CircularIsland circular;
    ArbitraryIsland arbitrary;

    void validate() const;
};

// Small-loop radiation resistance of the dual loop (in-medium wavelength).
double small_loop_radiation_resistance(double r_m, double f_hz, double eps_eff);

// T1 from a wire-space radiation impedance through the Babinet map.
double t1_from_wire_impedance(double c_qubit_f, cplx z_w, double eta_m);

// Closed form for the circular island, with the fitted finite-gap factor
// (1 + 2.1 w/r_i) on Re[Z_w]; the fit is calibrated for w/r_i <~ 0.2 and a
// warning is emitted beyond that.
double t1_analytic_loop(const T1Config& cfg);

// Arbitrary island of the same area: r_eff = sqrt(A/pi), no gap correction.
double t1_arbitrary_island(const T1Config& cfg);

// MoM-backed variant: solve the polygonal dual loop at f01 and use its
// Re[Z_w]. Returns {t1_s, re_zw_ohm}.
struct T1MomResult {
    double t1_s = 0.0;
    double re_zw_ohm = 0.0;
};
T1MomResult t1_mom_loop(const T1Config& cfg);

}  // namespace qrad
