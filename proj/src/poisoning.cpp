#include "qrad/poisoning.hpp"

#include <cmath>
#include <stdexcept>

namespace qrad {

double absorbed_power(const MatchReport& match, double temperature_k, PowerMode mode) {
    if (temperature_k < 0.0) throw std::invalid_argument("absorbed_power: negative temperature");
    if (temperature_k == 0.0) return 0.0;
    if (mode == PowerMode::approx)
        return blackbody_psd(match.f0_hz, temperature_k) * match.delta_f_n_hz;

    const Lobe lobe = fundamental_lobe(match.e_c);
    if (lobe.max_value <= 0.0) return 0.0;
    double p = 0.0;
    for (std::size_t i = lobe.first; i < lobe.last; ++i) {
        const double a = blackbody_psd(match.grid[i], temperature_k) * match.e_c[i];
        const double b = blackbody_psd(match.grid[i + 1], temperature_k) * match.e_c[i + 1];
        p += 0.5 * (a + b) * (match.grid[i + 1] - match.grid[i]);
    }
    return p;
}

double poisoning_rate(double f0_hz, double delta_f_n_hz, double temperature_k) {
    if (!(f0_hz > 0.0)) throw std::invalid_argument("poisoning_rate: f0 must be positive");
    if (delta_f_n_hz < 0.0) throw std::invalid_argument("poisoning_rate: negative bandwidth");
    if (temperature_k < 0.0) throw std::invalid_argument("poisoning_rate: negative temperature");
    if (temperature_k == 0.0) return 0.0;
    const double x = h_planck * f0_hz / (k_boltz * temperature_k);
    if (x > 700.0) return 0.0;
    return delta_f_n_hz / std::expm1(x);
}

double effective_temperature(double f0_hz, double delta_f_n_hz, double gamma_pa_hz) {
    if (!(f0_hz > 0.0)) throw std::invalid_argument("effective_temperature: f0 must be positive");
    if (!(delta_f_n_hz > 0.0))
        throw std::invalid_argument("effective_temperature: bandwidth must be positive");
    if (!(gamma_pa_hz > 0.0))
        throw std::invalid_argument("effective_temperature: rate must be positive");
    return (h_planck * f0_hz / k_boltz) / std::log1p(delta_f_n_hz / gamma_pa_hz);
}

PoisoningReport poisoning_report(const MatchReport& match, double temperature_k) {
    PoisoningReport rep;
    rep.f0_hz = match.f0_hz;
    rep.delta_f_n_hz = match.delta_f_n_hz;
    rep.temperature_k = temperature_k;
    rep.gamma_pa_hz = poisoning_rate(match.f0_hz, match.delta_f_n_hz, temperature_k);
    rep.power_exact_w = absorbed_power(match, temperature_k, PowerMode::exact);
    rep.power_approx_w = absorbed_power(match, temperature_k, PowerMode::approx);
    return rep;
}

}  // namespace qrad
