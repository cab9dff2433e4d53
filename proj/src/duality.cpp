#include "qrad/duality.hpp"

#include <cmath>
#include <stdexcept>

namespace qrad {

namespace {
void check_eta(double eta_m) {
    if (!(eta_m > 0.0) || !std::isfinite(eta_m))
        throw std::invalid_argument("duality: eta_m must be positive and finite");
}
}  // namespace

cplx wire_to_aperture(cplx z_wire, double eta_m) {
    check_eta(eta_m);
    if (std::abs(z_wire) == 0.0)
        throw std::invalid_argument("wire_to_aperture: zero impedance has no complement");
    return eta_m * eta_m / (4.0 * z_wire);
}

cplx aperture_to_wire(cplx z_aperture, double eta_m) {
    return wire_to_aperture(z_aperture, eta_m);
}

Medium map_medium(const Medium& m) {
    m.validate();
    return Medium{m.mu_rel, m.eps_rel, m.name + "-dual"};
}

double loop_inductance_to_capacitance(double inductance_h) {
    if (!(inductance_h > 0.0))
        throw std::invalid_argument("loop_inductance_to_capacitance: L must be positive");
    return 4.0 * (eps0 / mu0) * inductance_h;
}

double resolve_eta(EtaConvention convention, const Medium& wire_medium) {
    wire_medium.validate();
    switch (convention) {
        case EtaConvention::wire: return wire_medium.wave_impedance();
        case EtaConvention::vacuum: return eta0;
        case EtaConvention::aperture: return map_medium(wire_medium).wave_impedance();
        case EtaConvention::half_space: {
            // Parallel combination of the vacuum and in-medium half-space
            // admittances seen by a slot on the interface.
            const double r = wire_medium.mu_rel / wire_medium.eps_rel;
            return eta0 * std::sqrt(2.0 * r / (1.0 + r));
        }
    }
    throw std::logic_error("unknown eta convention");
}

ImpedanceSweep map_sweep_to_aperture(const ImpedanceSweep& wire_sweep, double eta_m) {
    if (wire_sweep.space_tag != SpaceTag::wire)
        throw std::invalid_argument("map_sweep_to_aperture: sweep is not in wire space");
    std::vector<cplx> za(wire_sweep.z.size());
    for (std::size_t i = 0; i < za.size(); ++i) za[i] = wire_to_aperture(wire_sweep.z[i], eta_m);
    return ImpedanceSweep(wire_sweep.grid, std::move(za), SpaceTag::aperture);
}

}  // namespace qrad
