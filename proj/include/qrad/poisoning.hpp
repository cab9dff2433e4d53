#pragma once

#include "qrad/matching.hpp"

// Photon-assisted quasiparticle poisoning from the blackbody environment
// seen through the antenna-junction match:
//   Gamma_pa = delta_f_N / (exp(h f0 / kB T) - 1),
// with the absorbed power available either as the exact integral of
// S(f,T) e_c(f) over the fundamental lobe or as the narrowband
// approximation S(f0,T) * delta_f_N.

namespace qrad {

enum class PowerMode { exact, approx };

double absorbed_power(const MatchReport& match, double temperature_k,
                      PowerMode mode = PowerMode::approx);

// Pair rate from the photon occupation at f0 and the noise bandwidth.
double poisoning_rate(double f0_hz, double delta_f_n_hz, double temperature_k);

// Invert the rate relation: temperature whose blackbody occupation would
// produce the observed rate through the same match.
double effective_temperature(double f0_hz, double delta_f_n_hz, double gamma_pa_hz);

struct PoisoningReport {
    double f0_hz = 0.0;
    double delta_f_n_hz = 0.0;
    double temperature_k = 0.0;
    double gamma_pa_hz = 0.0;
    double power_exact_w = 0.0;
    double power_approx_w = 0.0;
};

PoisoningReport poisoning_report(const MatchReport& match, double temperature_k);

}  // namespace qrad
