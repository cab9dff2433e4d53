#include "qrad/core.hpp"

#include <cmath>
#include <stdexcept>

namespace qrad {

void Medium::validate() const {
    if (!(eps_rel > 0.0) || !std::isfinite(eps_rel))
        throw std::invalid_argument("Medium: eps_rel must be positive and finite");
    if (!(mu_rel > 0.0) || !std::isfinite(mu_rel))
        throw std::invalid_argument("Medium: mu_rel must be positive and finite");
}

double Medium::refractive_index() const { return std::sqrt(eps_rel * mu_rel); }

double Medium::wave_impedance() const { return eta0 * std::sqrt(mu_rel / eps_rel); }

double Medium::wavelength(double f_hz) const {
    if (!(f_hz > 0.0)) throw std::invalid_argument("Medium::wavelength: f must be positive");
    return c0 / (f_hz * refractive_index());
}

double Medium::wavenumber(double f_hz) const { return 2.0 * pi / wavelength(f_hz); }

Medium wire_dual_medium(double eps_eff) {
    if (!(eps_eff >= 1.0))
        throw std::invalid_argument("wire_dual_medium: eps_eff must be >= 1");
    return Medium{1.0, eps_eff, "wire-dual"};
}

FrequencyGrid::FrequencyGrid(double f_start, double f_stop, std::size_t n)
    : f_start_hz(f_start), f_stop_hz(f_stop), n_points(n) {
    if (!(f_start > 0.0) || !std::isfinite(f_start) || !std::isfinite(f_stop))
        throw std::invalid_argument("FrequencyGrid: f_start must be positive and finite");
    if (n == 1) {
        if (f_stop != f_start)
            throw std::invalid_argument("FrequencyGrid: single-point grid requires f_start == f_stop");
        return;
    }
    if (n < 2) throw std::invalid_argument("FrequencyGrid: need at least one point");
    if (!(f_stop > f_start))
        throw std::invalid_argument("FrequencyGrid: f_stop must exceed f_start");
}

double FrequencyGrid::operator[](std::size_t i) const {
    if (i >= n_points) throw std::out_of_range("FrequencyGrid: index out of range");
    if (n_points == 1) return f_start_hz;
    return f_start_hz + (f_stop_hz - f_start_hz) *
                            (static_cast<double>(i) / static_cast<double>(n_points - 1));
}

double FrequencyGrid::step() const {
    if (n_points < 2) return 0.0;
    return (f_stop_hz - f_start_hz) / static_cast<double>(n_points - 1);
}

std::vector<double> FrequencyGrid::frequencies() const {
    std::vector<double> f(n_points);
    for (std::size_t i = 0; i < n_points; ++i) f[i] = (*this)[i];
    return f;
}

ImpedanceSweep::ImpedanceSweep(FrequencyGrid g, std::vector<cplx> values, SpaceTag tag)
    : grid(g), z(std::move(values)), space_tag(tag) {
    if (z.size() != grid.n_points)
        throw std::invalid_argument("ImpedanceSweep: value count does not match grid");
    for (const cplx& v : z) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("ImpedanceSweep: non-finite impedance entry");
        if (v.real() < -0.01)
            throw std::invalid_argument("ImpedanceSweep: negative resistance beyond -0.01 ohm");
    }
}

double effective_permittivity(double eps_substrate) {
    if (!(eps_substrate >= 1.0))
        throw std::invalid_argument("effective_permittivity: eps_substrate must be >= 1");
    return 0.5 * (1.0 + eps_substrate);
}

double blackbody_psd(double f_hz, double temperature_k) {
    if (!(f_hz > 0.0)) throw std::invalid_argument("blackbody_psd: f must be positive");
    if (temperature_k < 0.0) throw std::invalid_argument("blackbody_psd: negative temperature");
    if (temperature_k == 0.0) return 0.0;
    const double x = h_planck * f_hz / (k_boltz * temperature_k);
    if (x > 700.0) return 0.0;  // exp would overflow; Wien tail is numerically zero anyway
    return h_planck * f_hz / std::expm1(x);
}

}  // namespace qrad
