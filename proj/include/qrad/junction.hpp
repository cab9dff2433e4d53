#pragma once

#include "qrad/core.hpp"

// Josephson junction as a high-frequency load: normal resistance R_n in
// parallel with the junction self-capacitance C_j,
//   Z_j(w) = R_n (1 - j w tau) / (1 + w^2 tau^2),  tau = R_n C_j.

namespace qrad {

struct JunctionModel {
    double r_n_ohm = 0.0;  // normal-state resistance
    double c_j_f = 0.0;    // junction capacitance [F]
    // 2*Delta/e; aluminum default. Only used for the critical current.
    double gap_voltage_2delta_v = 380e-6;

    void validate() const;
    double tau_s() const { return r_n_ohm * c_j_f; }
};

cplx junction_impedance(const JunctionModel& j, double f_hz);

// Evaluate Z_j over a grid (aperture-space load curve).
ImpedanceSweep junction_sweep(const JunctionModel& j, const FrequencyGrid& grid);

// Ambegaokar-Baratoff critical current I_0 = pi * Delta / (2 e R_n), with the
// superconducting gap taken from the model's gap voltage 2*Delta/e.
double critical_current(const JunctionModel& j);

// Junction capacitance from area at the standard specific capacitance of
// 75 fF/um^2 for AlOx barriers.
double capacitance_from_area(double area_um2, double specific_c_ff_per_um2 = 75.0);

}  // namespace qrad
