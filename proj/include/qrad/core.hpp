#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qrad/constants.hpp"

// Shared electromagnetic bookkeeping: media, frequency grids, impedance
// sweeps and the blackbody spectral density used by the poisoning model.

namespace qrad {

using cplx = std::complex<double>;

// Homogeneous embedding medium. For qubit structures on a substrate the
// aperture problem lives in eps_rel = eps_eff and the Babinet wire dual
// in mu_rel = eps_eff (see duality.hpp).
struct Medium {
    double eps_rel = 1.0;
    double mu_rel = 1.0;
    std::string name = "vacuum";

    void validate() const;
    double refractive_index() const;   // sqrt(eps_rel * mu_rel)
    double wave_impedance() const;     // eta0 * sqrt(mu_rel / eps_rel)
    double wavelength(double f_hz) const;  // in-medium wavelength [m]
    double wavenumber(double f_hz) const;  // 2*pi / wavelength [1/m]
};

inline Medium vacuum_medium() { return Medium{}; }

// Wire-dual medium for an aperture structure on a substrate with the given
// effective permittivity: eps and mu swap under the field interchange.
Medium wire_dual_medium(double eps_eff);

// Uniform (linear) frequency grid, f_start > 0, strictly increasing.
// n_points >= 2 except for the degenerate single-point grid with
// f_start == f_stop, which exists so single-frequency runs can share the
// sweep machinery.
struct FrequencyGrid {
    double f_start_hz = 0.0;
    double f_stop_hz = 0.0;
    std::size_t n_points = 0;

    FrequencyGrid() = default;
    FrequencyGrid(double f_start, double f_stop, std::size_t n);

    double operator[](std::size_t i) const;
    std::size_t size() const { return n_points; }
    double step() const;
    std::vector<double> frequencies() const;
};

enum class SpaceTag { wire, aperture };

// Impedance-vs-frequency curve in either wire or aperture space.
// Construction rejects non-finite entries; real parts below the solver
// noise floor of -0.01 ohm are rejected as unphysical.
struct ImpedanceSweep {
    FrequencyGrid grid;
    std::vector<cplx> z;
    SpaceTag space_tag = SpaceTag::wire;

    ImpedanceSweep() = default;
    ImpedanceSweep(FrequencyGrid g, std::vector<cplx> values, SpaceTag tag);
};

// Effective permittivity seen by a planar structure at a vacuum/substrate
// interface: the mean of the two half-space permittivities.
double effective_permittivity(double eps_substrate);

// Single-mode, single-polarization blackbody power spectral density [W/Hz]:
// S(f,T) = h f / (exp(h f / kB T) - 1). Returns 0 at T = 0 and deep in the
// Wien tail (h f / kB T > 700) where the exponential overflows.
double blackbody_psd(double f_hz, double temperature_k);

}  // namespace qrad
