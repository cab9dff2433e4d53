#pragma once

#include <cstddef>
#include <utility>

#include "qrad/core.hpp"
#include "qrad/junction.hpp"

// Conjugate-match bookkeeping between the radiating structure and the
// junction load, using the power-wave reflection coefficient
//   Gamma = (Z_rad - conj(Z_j)) / (Z_rad + Z_j)
// and the coupling efficiency e_c = 1 - |Gamma|^2.

namespace qrad {

cplx reflection(cplx z_rad, cplx z_j);

// e_c clipped to [0, 1]; out-of-range values (possible when Re[Z] sits inside
// the solver noise floor) increment *clip_count when provided.
double coupling_efficiency(cplx z_rad, cplx z_j, std::size_t* clip_count = nullptr);

// Contiguous index range [first, last] around the global maximum where the
// curve stays >= 0.01 * max. Returns {0, 0} with max_value 0 for an all-zero
// curve.
struct Lobe {
    std::size_t first = 0;
    std::size_t last = 0;
    double max_value = 0.0;
    std::size_t argmax = 0;
};
Lobe fundamental_lobe(const std::vector<double>& curve);

// Trapezoidal integral of e_c over its fundamental lobe [Hz]. An all-zero
// curve yields zero bandwidth (warning on stderr), not an error.
double noise_bandwidth(const std::vector<double>& e_c, const FrequencyGrid& grid);

struct MatchReport {
    FrequencyGrid grid;
    std::vector<double> e_c;
    std::vector<cplx> z_rad;
    std::vector<cplx> z_j;
    double f0_hz = 0.0;          // peak-e_c frequency, parabolically refined
    double delta_f_n_hz = 0.0;   // noise bandwidth over the fundamental lobe
    cplx z_rad_at_f0;
    cplx z_j_at_f0;
    std::size_t clip_count = 0;  // e_c samples clipped into [0, 1]

    double peak_e_c() const;  // maximum of the e_c curve (0 when empty)
};

// Evaluate the match between an aperture-space radiation sweep and the
// junction over the sweep grid.
MatchReport match_report(const ImpedanceSweep& aperture_sweep, const JunctionModel& junction);

}  // namespace qrad
