#include "qrad/matching.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

namespace qrad {

cplx reflection(cplx z_rad, cplx z_j) {
    const cplx den = z_rad + z_j;
    const double scale = std::abs(z_rad) + std::abs(z_j);
    if (std::abs(den) <= 1e-12 * std::max(scale, 1.0))
        throw std::invalid_argument("reflection: degenerate denominator Z_rad + Z_j ~ 0");
    return (z_rad - std::conj(z_j)) / den;
}

double coupling_efficiency(cplx z_rad, cplx z_j, std::size_t* clip_count) {
    const cplx g = reflection(z_rad, z_j);
    double e_c = 1.0 - std::norm(g);
    if (e_c < 0.0 || e_c > 1.0) {
        if (clip_count) ++(*clip_count);
        e_c = std::clamp(e_c, 0.0, 1.0);
    }
    return e_c;
}

Lobe fundamental_lobe(const std::vector<double>& curve) {
    Lobe lobe;
    if (curve.empty()) return lobe;
    lobe.argmax = static_cast<std::size_t>(
        std::max_element(curve.begin(), curve.end()) - curve.begin());
    lobe.max_value = curve[lobe.argmax];
    if (lobe.max_value <= 0.0) return lobe;
    const double floor = 0.01 * lobe.max_value;
    std::size_t lo = lobe.argmax;
    while (lo > 0 && curve[lo - 1] >= floor) --lo;
    std::size_t hi = lobe.argmax;
    while (hi + 1 < curve.size() && curve[hi + 1] >= floor) ++hi;
    lobe.first = lo;
    lobe.last = hi;
    return lobe;
}

double noise_bandwidth(const std::vector<double>& e_c, const FrequencyGrid& grid) {
    if (e_c.size() != grid.size())
        throw std::invalid_argument("noise_bandwidth: curve length does not match grid");
    const Lobe lobe = fundamental_lobe(e_c);
    if (lobe.max_value <= 0.0) {
        std::cerr << "noise_bandwidth: coupling curve is identically zero\n";
        return 0.0;
    }
    double integral = 0.0;
    for (std::size_t i = lobe.first; i < lobe.last; ++i)
        integral += 0.5 * (e_c[i] + e_c[i + 1]) * (grid[i + 1] - grid[i]);
    return integral;
}

double MatchReport::peak_e_c() const {
    double m = 0.0;
    for (double v : e_c) m = std::max(m, v);
    return m;
}

MatchReport match_report(const ImpedanceSweep& aperture_sweep, const JunctionModel& junction) {
    if (aperture_sweep.space_tag != SpaceTag::aperture)
        throw std::invalid_argument("match_report: sweep must be in aperture space");
    const FrequencyGrid& grid = aperture_sweep.grid;
    if (grid.size() < 3)
        throw std::invalid_argument("match_report: need at least 3 grid points");

    MatchReport rep;
    rep.grid = grid;
    rep.z_rad = aperture_sweep.z;
    rep.z_j.resize(grid.size());
    rep.e_c.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rep.z_j[i] = junction_impedance(junction, grid[i]);
        rep.e_c[i] = coupling_efficiency(rep.z_rad[i], rep.z_j[i], &rep.clip_count);
    }

    const Lobe lobe = fundamental_lobe(rep.e_c);
    const std::size_t k = lobe.argmax;
    double f0 = grid[k];
    if (k > 0 && k + 1 < grid.size()) {
        // Three-point parabolic refinement, clamped to the sample bracket.
        const double ym = rep.e_c[k - 1], y0 = rep.e_c[k], yp = rep.e_c[k + 1];
        const double curv = ym - 2.0 * y0 + yp;
        if (curv < 0.0) {
            double delta = 0.5 * (ym - yp) / curv;
            delta = std::clamp(delta, -0.5, 0.5);
            f0 = grid[k] + delta * grid.step();
        }
    }
    rep.f0_hz = f0;
    rep.delta_f_n_hz = noise_bandwidth(rep.e_c, grid);

    // Radiation impedance linearly interpolated at f0; junction evaluated exactly.
    if (grid.size() >= 2 && grid.step() > 0.0) {
        const double pos = (f0 - grid.f_start_hz) / grid.step();
        const std::size_t i0 = std::min(static_cast<std::size_t>(std::max(pos, 0.0)),
                                        grid.size() - 2);
        const double w = std::clamp(pos - static_cast<double>(i0), 0.0, 1.0);
        rep.z_rad_at_f0 = (1.0 - w) * rep.z_rad[i0] + w * rep.z_rad[i0 + 1];
    } else {
        rep.z_rad_at_f0 = rep.z_rad[k];
    }
    rep.z_j_at_f0 = junction_impedance(junction, f0);
    return rep;
}

}  // namespace qrad
