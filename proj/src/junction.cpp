#include "qrad/junction.hpp"

#include <cmath>
#include <stdexcept>

namespace qrad {

void JunctionModel::validate() const {
    if (!(r_n_ohm > 0.0) || !std::isfinite(r_n_ohm))
        throw std::invalid_argument("JunctionModel: R_n must be positive and finite");
    if (!(c_j_f > 0.0) || !std::isfinite(c_j_f))
        throw std::invalid_argument("JunctionModel: C_j must be positive and finite");
    if (!(gap_voltage_2delta_v > 0.0) || !std::isfinite(gap_voltage_2delta_v))
        throw std::invalid_argument("JunctionModel: gap voltage must be positive and finite");
}

cplx junction_impedance(const JunctionModel& j, double f_hz) {
    j.validate();
    if (!(f_hz > 0.0)) throw std::invalid_argument("junction_impedance: f must be positive");
    const double wt = 2.0 * pi * f_hz * j.tau_s();
    const double den = 1.0 + wt * wt;
    return j.r_n_ohm * cplx(1.0, -wt) / den;
}

ImpedanceSweep junction_sweep(const JunctionModel& j, const FrequencyGrid& grid) {
    std::vector<cplx> z(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) z[i] = junction_impedance(j, grid[i]);
    return ImpedanceSweep(grid, std::move(z), SpaceTag::aperture);
}

double critical_current(const JunctionModel& j) {
    j.validate();
    const double delta_j = e_charge * j.gap_voltage_2delta_v / 2.0;  // gap energy [J]
    return pi * delta_j / (2.0 * e_charge * j.r_n_ohm);
}

double capacitance_from_area(double area_um2, double specific_c_ff_per_um2) {
    if (!(area_um2 > 0.0) || !(specific_c_ff_per_um2 > 0.0))
        throw std::invalid_argument("capacitance_from_area: area and specific capacitance must be positive");
    return area_um2 * specific_c_ff_per_um2 * 1e-15;
}

}  // namespace qrad
