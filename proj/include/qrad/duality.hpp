#pragma once

#include "qrad/core.hpp"

// Babinet mapping between complementary wire and aperture antennas:
//   Z_aperture * Z_wire = eta_m^2 / 4.
// The mapping constant is an explicit parameter: for structures on a
// substrate the appropriate wave impedance is a modeling choice, captured
// by EtaConvention below.

namespace qrad {

// Apply the complementary-antenna relation. Involutive: applying it twice
// with the same eta_m returns the input.
cplx wire_to_aperture(cplx z_wire, double eta_m);
cplx aperture_to_wire(cplx z_aperture, double eta_m);

// Field interchange swaps the material constants of the embedding medium.
Medium map_medium(const Medium& m);

// Static limit of the Babinet relation: a wire loop of inductance L maps to
// an aperture capacitance C = 4 (eps0/mu0) L.
double loop_inductance_to_capacitance(double inductance_h);

// Map a whole wire-space sweep into aperture space.
ImpedanceSweep map_sweep_to_aperture(const ImpedanceSweep& wire_sweep, double eta_m);

// Which wave impedance to use in the complementary-antenna relation when
// the media are nontrivial. `wire` (the dual solver's medium, the default)
// keeps the static-limit identity and the involution mutually consistent;
// `vacuum` and `aperture` are exposed for sensitivity checks. `half_space`
// treats the aperture as a slot on the boundary between vacuum and the
// equivalent dielectric: the port sees the two half-space admittances in
// parallel, so the mapping constant eta^2/4 is the harmonic mean of the
// vacuum and in-medium constants, eta = eta0 sqrt(2r/(1+r)) with
// r = mu_rel/eps_rel of the wire-space medium. It reduces to eta0 when the
// medium is trivial and is the default for the device pipeline.
enum class EtaConvention { wire, vacuum, aperture, half_space };

double resolve_eta(EtaConvention convention, const Medium& wire_medium);

}  // namespace qrad
