#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qrad/core.hpp"
#include "qrad/junction.hpp"

using namespace qrad;

namespace {

const JunctionModel kRef{7000.0, 9e-15};

}  // namespace

TEST_CASE("junction impedance tends to R_n at low frequency") {
    // The model has no dc path besides R_n; at f << 1/(2 pi tau) the
    // capacitor is open and Z -> R_n.
    const cplx z = junction_impedance(kRef, 1e-3);
    CHECK(std::abs(z.real() - kRef.r_n_ohm) / kRef.r_n_ohm < 1e-10);
    CHECK(std::abs(z.imag()) / kRef.r_n_ohm < 1e-10);
    CHECK_THROWS_AS(junction_impedance(kRef, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(junction_impedance(kRef, -1e9), std::invalid_argument);
}

TEST_CASE("junction impedance at the RC corner is (R_n/2)(1 - j)") {
    const double f_corner = 1.0 / (2.0 * pi * kRef.tau_s());
    const cplx z = junction_impedance(kRef, f_corner);
    CHECK(std::abs(z.real() - kRef.r_n_ohm / 2.0) / kRef.r_n_ohm < 1e-12);
    CHECK(std::abs(z.imag() + kRef.r_n_ohm / 2.0) / kRef.r_n_ohm < 1e-12);
}

TEST_CASE("reference junction at 100 GHz") {
    const cplx z = junction_impedance(kRef, 100e9);
    // tau = 63 ps, omega tau ~ 39.6: deep in the capacitive rolloff.
    CHECK(z.real() == doctest::Approx(4.5).epsilon(0.02));
    CHECK(z.imag() == doctest::Approx(-176.8).epsilon(0.02));
}

TEST_CASE("junction impedance equals the parallel RC combination") {
    for (double f : {1e9, 5e9, 50e9, 97e9, 150e9, 500e9}) {
        const cplx z = junction_impedance(kRef, f);
        const cplx y = 1.0 / cplx(kRef.r_n_ohm, 0.0) +
                       cplx(0.0, 2.0 * pi * f * kRef.c_j_f);
        const cplx z_ref = 1.0 / y;
        CHECK(std::abs(z - z_ref) / std::abs(z_ref) < 1e-12);
    }
}

TEST_CASE("junction impedance is capacitive with decreasing real part") {
    double prev_re = kRef.r_n_ohm + 1.0;
    for (double f = 1e9; f <= 1e12; f *= 2.0) {
        const cplx z = junction_impedance(kRef, f);
        CHECK(z.real() > 0.0);
        CHECK(z.real() < prev_re);
        CHECK(z.imag() <= 0.0);
        CHECK(std::abs(z) <= kRef.r_n_ohm);
        prev_re = z.real();
    }
}

TEST_CASE("junction sweep evaluates pointwise and is tagged aperture") {
    const FrequencyGrid grid(20e9, 200e9, 19);
    const ImpedanceSweep s = junction_sweep(kRef, grid);
    CHECK(s.space_tag == SpaceTag::aperture);
    REQUIRE(s.z.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const cplx z = junction_impedance(kRef, grid[i]);
        CHECK(s.z[i] == z);
    }
}

TEST_CASE("critical current from the ambegaokar-baratoff relation") {
    const double i0 = critical_current(kRef);
    CHECK(i0 == doctest::Approx(42.6e-9).epsilon(0.01));
    // The I_0 R_n product depends only on the gap voltage.
    CHECK(i0 * kRef.r_n_ohm == doctest::Approx(300e-6).epsilon(0.04));

    JunctionModel doubled = kRef;
    doubled.r_n_ohm *= 2.0;
    CHECK(critical_current(doubled) == doctest::Approx(i0 / 2.0).epsilon(1e-12));
    CHECK(critical_current(doubled) * doubled.r_n_ohm ==
          doctest::Approx(i0 * kRef.r_n_ohm).epsilon(1e-12));
}

TEST_CASE("junction capacitance from area") {
    CHECK(capacitance_from_area(0.12, 75.0) == doctest::Approx(9e-15).epsilon(1e-12));
    CHECK(capacitance_from_area(1.0, 75.0) == doctest::Approx(75e-15).epsilon(1e-12));
    CHECK_THROWS_AS(capacitance_from_area(0.0, 75.0), std::invalid_argument);
    CHECK_THROWS_AS(capacitance_from_area(0.12, 0.0), std::invalid_argument);
}

TEST_CASE("junction model validation") {
    CHECK(kRef.gap_voltage_2delta_v == doctest::Approx(380e-6).epsilon(1e-14));
    CHECK(kRef.tau_s() == doctest::Approx(63e-12).epsilon(1e-12));

    JunctionModel bad = kRef;
    bad.r_n_ohm = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = kRef;
    bad.c_j_f = -1e-15;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = kRef;
    bad.gap_voltage_2delta_v = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_THROWS_AS(junction_impedance(bad, 1e9), std::invalid_argument);
    CHECK_THROWS_AS(critical_current(bad), std::invalid_argument);
}
