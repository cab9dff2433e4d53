#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qrad/core.hpp"
#include "qrad/radiative_t1.hpp"

using namespace qrad;

namespace {

T1Config circular_config(double eps_eff, double r_m = 100e-6, double gap_m = 10e-6) {
    T1Config cfg;
    cfg.c_qubit_f = 100e-15;
    cfg.f01_hz = 5e9;
    cfg.eps_eff = eps_eff;
    cfg.kind = IslandKind::circular;
    cfg.circular = CircularIsland{r_m, gap_m};
    return cfg;
}

// Ideal (gapless) closed form for the loop T1; the same algebra the
// library composes from the loop resistance and the Babinet map.
double ideal_t1(double c_f, double f_hz, double eps_eff, double r_m) {
    const double w = 2.0 * pi * f_hz;
    const double x = c0 / (w * r_m);
    return 3.0 / (2.0 * pi) * std::pow(eps_eff, -2.5) * eta0 * c_f * x * x * x * x;
}

}  // namespace

TEST_CASE("small-loop radiation resistance matches the classical result") {
    // 320 pi^6 (r/lambda)^4 with eta = 120 pi; our eta0 is the exact SI
    // value, so the ratio of the two must be exactly eta0/(120 pi).
    const double r = 1e-3, f = 10e9;
    const double lambda = c0 / f;
    const double classical = 320.0 * std::pow(pi, 6) * std::pow(r / lambda, 4.0);
    const double ours = small_loop_radiation_resistance(r, f, 1.0);
    CHECK(std::abs(ours / classical - eta0 / (120.0 * pi)) < 1e-12);
    CHECK(ours == doctest::Approx(classical).epsilon(0.001));
}

TEST_CASE("loop resistance scales as the fourth power of size and frequency") {
    const double base = small_loop_radiation_resistance(100e-6, 5e9, 6.0);
    CHECK(small_loop_radiation_resistance(200e-6, 5e9, 6.0) ==
          doctest::Approx(16.0 * base).epsilon(1e-12));
    CHECK(small_loop_radiation_resistance(100e-6, 10e9, 6.0) ==
          doctest::Approx(16.0 * base).epsilon(1e-12));
    // eps enters through sqrt(eps) and the in-medium wavelength: eps^{5/2}.
    CHECK(small_loop_radiation_resistance(100e-6, 5e9, 1.0) * std::pow(6.0, 2.5) ==
          doctest::Approx(base).epsilon(1e-12));
    CHECK_THROWS_AS(small_loop_radiation_resistance(0.0, 5e9, 6.0), std::invalid_argument);
    CHECK_THROWS_AS(small_loop_radiation_resistance(1e-3, 5e9, 0.5), std::invalid_argument);
}

TEST_CASE("t1 from wire impedance uses only the radiation resistance") {
    const double t1 = t1_from_wire_impedance(100e-15, cplx(5.0, 100.0), eta0);
    CHECK(t1 == doctest::Approx(eta0 * eta0 * 100e-15 / (4.0 * 5.0)).epsilon(1e-12));
    CHECK(t1_from_wire_impedance(100e-15, cplx(5.0, -3.0), eta0) ==
          doctest::Approx(t1).epsilon(1e-14));
    // Doubling the resistance halves the lifetime.
    CHECK(t1_from_wire_impedance(100e-15, cplx(10.0, 0.0), eta0) ==
          doctest::Approx(t1 / 2.0).epsilon(1e-12));
    CHECK_THROWS_AS(t1_from_wire_impedance(100e-15, cplx(0.0, 50.0), eta0),
                    std::invalid_argument);
    CHECK_THROWS_AS(t1_from_wire_impedance(0.0, cplx(5.0, 0.0), eta0),
                    std::invalid_argument);
}

TEST_CASE("closed-form t1 equals the two-step composition") {
    for (double eps : {1.0, 2.0, 6.0}) {
        for (double r : {50e-6, 100e-6, 200e-6}) {
            for (double f : {1e9, 5e9, 20e9}) {
                const double re_zw = small_loop_radiation_resistance(r, f, eps);
                const double composed = t1_from_wire_impedance(100e-15, cplx(re_zw, 0.0), eta0);
                const double closed = ideal_t1(100e-15, f, eps, r);
                CHECK(std::abs(composed - closed) / closed < 1e-12);
            }
        }
    }
}

TEST_CASE("t1 reference pair: vacuum milliseconds, on-chip microseconds") {
    // 100 fF island, 100 um radius, 5 GHz; gapless ideal values.
    const double t1_vac = t1_from_wire_impedance(
        100e-15, cplx(small_loop_radiation_resistance(100e-6, 5e9, 1.0), 0.0), eta0);
    CHECK(t1_vac == doctest::Approx(1.5e-3).epsilon(0.02));
    const double t1_chip = t1_from_wire_impedance(
        100e-15, cplx(small_loop_radiation_resistance(100e-6, 5e9, 6.0), 0.0), eta0);
    CHECK(t1_chip == doctest::Approx(17e-6).epsilon(0.02));
    CHECK(t1_vac / t1_chip == doctest::Approx(std::pow(6.0, 2.5)).epsilon(1e-12));
}

TEST_CASE("finite gap shortens t1 by the fitted factor") {
    const T1Config cfg = circular_config(6.0, 100e-6, 10e-6);  // w/r = 0.1
    const double with_gap = t1_analytic_loop(cfg);
    const double ideal = ideal_t1(cfg.c_qubit_f, cfg.f01_hz, cfg.eps_eff, 100e-6);
    CHECK(ideal / with_gap == doctest::Approx(1.21).epsilon(1e-12));
    // Monotone: wider gaps couple better and decay faster.
    double prev = t1_analytic_loop(circular_config(6.0, 100e-6, 1e-6));
    for (double w : {5e-6, 10e-6, 15e-6, 20e-6}) {
        const double t = t1_analytic_loop(circular_config(6.0, 100e-6, w));
        CHECK(t < prev);
        prev = t;
    }
}

TEST_CASE("arbitrary island uses the equal-area effective radius") {
    T1Config cfg = circular_config(6.0);
    cfg.kind = IslandKind::arbitrary;
    cfg.arbitrary = ArbitraryIsland{pi * 100e-6 * 100e-6};
    const double t1_area = t1_arbitrary_island(cfg);
    // Same as the gapless circular island of radius 100 um.
    CHECK(t1_area == doctest::Approx(ideal_t1(cfg.c_qubit_f, cfg.f01_hz, 6.0, 100e-6))
                         .epsilon(1e-12));

    // Halving the area quadruples the lifetime: T1 ~ 1/r_eff^4 = (pi/A)^2.
    T1Config half = cfg;
    half.arbitrary.area_m2 /= 2.0;
    CHECK(t1_arbitrary_island(half) == doctest::Approx(4.0 * t1_area).epsilon(1e-12));

    // A 177x177 um square has nearly the same area as the r = 100 um disc.
    T1Config square = cfg;
    square.arbitrary.area_m2 = 177e-6 * 177e-6;
    CHECK(t1_arbitrary_island(square) == doctest::Approx(t1_area).epsilon(0.015));
}

TEST_CASE("mom-backed loop t1 agrees with the closed form at kr = 0.2") {
    // Pick f01 so the loop (r_island + w/2 = 105 um) sits at kr = 0.2
    // in the eps_eff = 6 medium.
    const double r_loop = 105e-6;
    const double f01 = 0.2 * c0 / (2.0 * pi * std::sqrt(6.0) * r_loop);
    T1Config cfg = circular_config(6.0, 100e-6, 10e-6);
    cfg.f01_hz = f01;
    const T1MomResult mom = t1_mom_loop(cfg);
    const double analytic = t1_analytic_loop(cfg);
    CHECK(mom.re_zw_ohm > 0.0);
    CHECK(std::abs(mom.t1_s - analytic) / analytic < 0.05);
}

TEST_CASE("mom-backed loop t1 at the production operating point") {
    const T1Config cfg = circular_config(6.0, 100e-6, 10e-6);
    const T1MomResult mom = t1_mom_loop(cfg);
    const double analytic = t1_analytic_loop(cfg);
    CHECK(std::abs(mom.t1_s - analytic) / analytic < 0.05);
    CHECK(mom.t1_s == doctest::Approx(14e-6).epsilon(0.1));
}

TEST_CASE("t1 config validation") {
    T1Config bad = circular_config(6.0);
    bad.c_qubit_f = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = circular_config(6.0);
    bad.f01_hz = -1e9;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = circular_config(0.5);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = circular_config(6.0, 0.0);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = circular_config(6.0);
    bad.kind = IslandKind::arbitrary;
    bad.arbitrary = ArbitraryIsland{0.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
