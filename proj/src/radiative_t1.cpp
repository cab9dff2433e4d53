#include "qrad/radiative_t1.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "qrad/constants.hpp"
#include "qrad/geometry.hpp"
#include "qrad/mom.hpp"

namespace qrad {

void T1Config::validate() const {
    if (!(c_qubit_f > 0.0) || !std::isfinite(c_qubit_f))
        throw std::invalid_argument("qubit capacitance must be positive and finite");
    if (!(f01_hz > 0.0) || !std::isfinite(f01_hz))
        throw std::invalid_argument("f01 must be positive and finite");
    if (!(eps_eff >= 1.0) || !std::isfinite(eps_eff))
        throw std::invalid_argument("eps_eff must be >= 1");
    if (kind == IslandKind::circular) {
        if (!(circular.r_island_m > 0.0) || !(circular.gap_w_m > 0.0))
            throw std::invalid_argument("circular island needs positive radius and gap width");
    } else {
        if (!(arbitrary.area_m2 > 0.0))
            throw std::invalid_argument("arbitrary island needs a positive area");
    }
}

double small_loop_radiation_resistance(double r_m, double f_hz, double eps_eff) {
    if (!(r_m > 0.0) || !(f_hz > 0.0) || !(eps_eff >= 1.0))
        throw std::invalid_argument("loop radius, frequency and eps_eff must be positive");
    const double lambda_med = c0 / (f_hz * std::sqrt(eps_eff));
    const double ratio = r_m / lambda_med;
    return (8.0 / 3.0) * std::pow(pi, 5) * std::sqrt(eps_eff) * eta0 *
           (ratio * ratio) * (ratio * ratio);
}

double t1_from_wire_impedance(double c_qubit_f, cplx z_w, double eta_m) {
    if (!(c_qubit_f > 0.0)) throw std::invalid_argument("qubit capacitance must be positive");
    if (!(eta_m > 0.0)) throw std::invalid_argument("medium impedance must be positive");
    const double re = z_w.real();
    if (!(re > 0.0) || !std::isfinite(re))
        throw std::invalid_argument("wire radiation resistance must be positive");
    return eta_m * eta_m * c_qubit_f / (4.0 * re);
}

namespace {

double t1_small_loop(double c_qubit_f, double f01_hz, double eps_eff, double r_m) {
    // Vacuum-impedance Babinet map against the in-medium loop resistance;
    // the eps_eff powers combine to the aperture-side eps^(-5/2) scaling.
    const double re_zw = small_loop_radiation_resistance(r_m, f01_hz, eps_eff);
    return t1_from_wire_impedance(c_qubit_f, cplx(re_zw, 0.0), eta0);
}

}  // namespace

double t1_analytic_loop(const T1Config& cfg) {
    cfg.validate();
    if (cfg.kind != IslandKind::circular)
        throw std::invalid_argument("t1_analytic_loop expects a circular island");
    const double ratio = cfg.circular.gap_w_m / cfg.circular.r_island_m;
    if (ratio > 0.2)
        std::cerr << "[radiative-t1] warning: gap/radius = " << ratio
                  << " exceeds the fitted range (<= 0.2) of the finite-gap correction\n";
    const double t1_ideal =
        t1_small_loop(cfg.c_qubit_f, cfg.f01_hz, cfg.eps_eff, cfg.circular.r_island_m);
    return t1_ideal / (1.0 + 2.1 * ratio);
}

double t1_arbitrary_island(const T1Config& cfg) {
    cfg.validate();
    if (cfg.kind != IslandKind::arbitrary)
        throw std::invalid_argument("t1_arbitrary_island expects an arbitrary-area island");
    const double r_eff = std::sqrt(cfg.arbitrary.area_m2 / pi);
    return t1_small_loop(cfg.c_qubit_f, cfg.f01_hz, cfg.eps_eff, r_eff);
}

T1MomResult t1_mom_loop(const T1Config& cfg) {
    cfg.validate();
    if (cfg.kind != IslandKind::circular)
        throw std::invalid_argument("t1_mom_loop expects a circular island");

    QubitGeometry g;
    g.shape = CircularTransmon{cfg.circular.r_island_m, cfg.circular.gap_w_m};
    // effective_permittivity averages vacuum and substrate; invert it so the
    // dual model lands exactly on the requested eps_eff.
    g.substrate_eps = 2.0 * cfg.eps_eff - 1.0;

    const SolverConfig scfg{};
    const WireModel model =
        discretize(build_dual_wire_model(g), scfg.segments_per_wavelength, cfg.f01_hz);
    // The island return current is a uniform ring around the gap, so the
    // magnetic-dipole-mode resistance is the one seen by the qubit; a
    // point-fed input impedance would add localized higher-mode radiation.
    const double re_zw = uniform_loop_resistance(model, cfg.f01_hz, scfg);

    T1MomResult out;
    out.re_zw_ohm = re_zw;
    out.t1_s = t1_from_wire_impedance(cfg.c_qubit_f, cplx(re_zw, 0.0), eta0);
    return out;
}

}  // namespace qrad
