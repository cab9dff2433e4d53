#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qrad/core.hpp"
#include "qrad/junction.hpp"
#include "qrad/matching.hpp"

using namespace qrad;

namespace {

// Aperture sweep whose impedance is the conjugate of the reference junction
// at f_match, held constant across the grid; e_c then peaks where the
// junction curve passes closest to that value.
ImpedanceSweep conjugate_plateau(const FrequencyGrid& grid, const JunctionModel& j,
                                 double f_match) {
    const cplx z = std::conj(junction_impedance(j, f_match));
    return ImpedanceSweep(grid, std::vector<cplx>(grid.size(), z), SpaceTag::aperture);
}

}  // namespace

TEST_CASE("reflection vanishes at the conjugate match") {
    const cplx z_j(4.5, -176.8);
    const cplx g = reflection(std::conj(z_j), z_j);
    CHECK(std::abs(g) < 1e-15);
    CHECK(std::abs(reflection(cplx(50.0, 0.0), cplx(50.0, 0.0))) < 1e-15);
    CHECK(coupling_efficiency(std::conj(z_j), z_j) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("real mismatch gives the textbook reflection magnitude") {
    // Reactances cancel; Re 9 vs 4.5 leaves |Gamma| = 4.5/13.5 = 1/3.
    const cplx z_rad(9.0, 176.8);
    const cplx z_j(4.5, -176.8);
    const cplx g = reflection(z_rad, z_j);
    CHECK(std::abs(g) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(coupling_efficiency(z_rad, z_j) == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("reflection rejects a degenerate denominator") {
    CHECK_THROWS_AS(reflection(cplx(0.0, 50.0), cplx(0.0, -50.0)), std::invalid_argument);
}

TEST_CASE("coupling efficiency is clipped to [0,1] and counted") {
    // A slightly negative radiation resistance (within the solver floor)
    // can push |Gamma| just above 1; the efficiency must clip, not leak.
    std::size_t clips = 0;
    const double e = coupling_efficiency(cplx(-0.005, 10.0), cplx(5.0, -10.0), &clips);
    CHECK(e == 0.0);
    CHECK(clips == 1);
    clips = 0;
    coupling_efficiency(cplx(50.0, 0.0), cplx(50.0, 0.0), &clips);
    CHECK(clips == 0);
}

TEST_CASE("coupling efficiency is symmetric under port exchange") {
    const std::vector<std::pair<cplx, cplx>> pairs{
        {{73.0, 42.5}, {4.5, -176.8}},
        {{363.0, -211.3}, {9.0, 150.0}},
        {{1.0, -3.0}, {2.0, 5.0}},
    };
    for (const auto& [a, b] : pairs) {
        const double eab = coupling_efficiency(a, b);
        const double eba = coupling_efficiency(b, a);
        CHECK(std::abs(eab - eba) < 1e-14);
        CHECK(eab >= 0.0);
        CHECK(eab <= 1.0);
    }
}

TEST_CASE("fundamental lobe tracks the main peak only") {
    const std::vector<double> curve{0.0, 0.2, 1.0, 0.3, 0.005, 0.4, 0.2, 0.0};
    const Lobe lobe = fundamental_lobe(curve);
    CHECK(lobe.argmax == 2);
    CHECK(lobe.max_value == 1.0);
    CHECK(lobe.first == 1);
    CHECK(lobe.last == 3);  // the 0.005 point falls below the 1% floor

    const Lobe zero = fundamental_lobe(std::vector<double>(5, 0.0));
    CHECK(zero.max_value == 0.0);
}

TEST_CASE("noise bandwidth of an ideal rectangular window") {
    // e_c == 1 over exactly 2 GHz, 0 elsewhere: the integral is the width.
    const FrequencyGrid grid(96e9, 104e9, 81);
    std::vector<double> e_c(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (grid[i] >= 99e9 - 1.0 && grid[i] <= 101e9 + 1.0) e_c[i] = 1.0;
    CHECK(noise_bandwidth(e_c, grid) == doctest::Approx(2e9).epsilon(1e-9));
}

TEST_CASE("noise bandwidth of a flat-zero curve is zero with a warning") {
    const FrequencyGrid grid(96e9, 104e9, 9);
    CHECK(noise_bandwidth(std::vector<double>(9, 0.0), grid) == 0.0);
    CHECK_THROWS_AS(noise_bandwidth(std::vector<double>(4, 0.0), grid),
                    std::invalid_argument);
}

TEST_CASE("noise bandwidth is stable under grid refinement") {
    // Lorentzian lobe, gamma = 2 GHz: refine the grid 2x and compare.
    auto lorentz = [](const FrequencyGrid& g) {
        std::vector<double> e(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double x = (g[i] - 100e9) / 2e9;
            e[i] = 0.9 / (1.0 + x * x);
        }
        return e;
    };
    const FrequencyGrid coarse(60e9, 140e9, 801);
    const FrequencyGrid fine(60e9, 140e9, 1601);
    const double bw_c = noise_bandwidth(lorentz(coarse), coarse);
    const double bw_f = noise_bandwidth(lorentz(fine), fine);
    CHECK(std::abs(bw_c - bw_f) / bw_f < 0.01);
}

TEST_CASE("match report finds the conjugate-match peak") {
    const JunctionModel j{7000.0, 9e-15};
    const FrequencyGrid grid(80e9, 120e9, 81);
    const double f_match = 97.2e9;  // deliberately between grid nodes
    const MatchReport rep = match_report(conjugate_plateau(grid, j, f_match), j);

    REQUIRE(rep.e_c.size() == grid.size());
    // The sampled peak sits half a step off the true match, so it is close
    // to but not exactly one.
    CHECK(rep.peak_e_c() > 0.99);
    CHECK(rep.peak_e_c() <= 1.0);
    // Refined peak lands within one step of the true match and inside the
    // bracket around the discrete argmax.
    CHECK(std::abs(rep.f0_hz - f_match) < grid.step());
    const Lobe lobe = fundamental_lobe(rep.e_c);
    CHECK(rep.f0_hz >= grid[lobe.argmax] - grid.step());
    CHECK(rep.f0_hz <= grid[lobe.argmax] + grid.step());
    CHECK(rep.delta_f_n_hz > 0.0);
    CHECK(rep.clip_count == 0);
    // Interpolated curve values at f0 agree with the inputs.
    CHECK(std::abs(rep.z_rad_at_f0 - rep.z_rad[lobe.argmax]) < 1e-9);
    CHECK(std::abs(rep.z_j_at_f0 - junction_impedance(j, rep.f0_hz)) < 1e-9);
}

TEST_CASE("match report e_c bounds hold everywhere") {
    const JunctionModel j{7000.0, 9e-15};
    const FrequencyGrid grid(20e9, 200e9, 181);
    const MatchReport rep = match_report(conjugate_plateau(grid, j, 97e9), j);
    for (double e : rep.e_c) {
        CHECK(e >= 0.0);
        CHECK(e <= 1.0);
    }
    CHECK(rep.f0_hz >= grid.f_start_hz);
    CHECK(rep.f0_hz <= grid.f_stop_hz);
}

TEST_CASE("open-circuit junction kills the coupling") {
    const JunctionModel open{1e15, 1e-21};
    const FrequencyGrid grid(20e9, 200e9, 91);
    std::vector<cplx> z(grid.size(), cplx(100.0, 20.0));
    const MatchReport rep = match_report(ImpedanceSweep(grid, z, SpaceTag::aperture), open);
    CHECK(rep.peak_e_c() < 1e-9);
    CHECK(rep.delta_f_n_hz < 1.0);  // Hz; effectively zero bandwidth
}

TEST_CASE("match report validates its inputs") {
    const JunctionModel j{7000.0, 9e-15};
    const FrequencyGrid grid(20e9, 200e9, 5);
    std::vector<cplx> z(grid.size(), cplx(100.0, 0.0));
    const ImpedanceSweep wire(grid, z, SpaceTag::wire);
    CHECK_THROWS_AS(match_report(wire, j), std::invalid_argument);

    const FrequencyGrid tiny(97e9, 97e9, 1);
    const ImpedanceSweep one(tiny, {cplx(100.0, 0.0)}, SpaceTag::aperture);
    CHECK_THROWS_AS(match_report(one, j), std::invalid_argument);
}
