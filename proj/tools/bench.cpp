// Benchmark of the OpenMP kernels against their serial reference
// implementations: matrix assembly at a single frequency and a full
// impedance sweep. Both paths must agree entry by entry; the run fails
// (nonzero exit) if they drift apart, so this doubles as a consistency
// check at sizes the unit tests don't reach.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "qrad/core.hpp"
#include "qrad/geometry.hpp"
#include "qrad/mom.hpp"

using namespace qrad;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Center-fed straight dipole, discretized so the mesh has roughly
// 20 * total_len / lambda(f_stop) segments.
WireModel bench_dipole(double total_len_m, double radius_m, int spw, double f_stop_hz) {
    WireModel m;
    m.topology_tag = TopologyTag::dipole;
    const double half = 0.5 * total_len_m;
    m.segments = {Segment{{-half, 0.0, 0.0}, {0.0, 0.0, 0.0}, radius_m},
                  Segment{{0.0, 0.0, 0.0}, {half, 0.0, 0.0}, radius_m}};
    m.feed_segment_index = 0;
    m.validate();
    return discretize(m, spw, f_stop_hz);
}

double max_entry_diff(const MomMatrix& a, const MomMatrix& b) {
    return (a.entries - b.entries).cwiseAbs().maxCoeff();
}

double max_sweep_diff(const ImpedanceSweep& a, const ImpedanceSweep& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.z.size(); ++i)
        worst = std::max(worst, std::abs(a.z[i] - b.z[i]));
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"OpenMP vs serial-reference benchmark for the MoM kernels"};
    int reps = 3;
    double f_ghz = 4.5;
    std::size_t sweep_points = 48;
    app.add_option("--reps", reps, "repetitions per timing")->check(CLI::PositiveNumber);
    app.add_option("--f-ghz", f_ghz, "assembly frequency (sets the mesh size)");
    app.add_option("--sweep-points", sweep_points, "points in the sweep scenario");
    CLI11_PARSE(app, argc, argv);

    const SolverConfig cfg;

    // ~20 segments per wavelength on a 1 m dipole: n grows linearly with f.
    const double f_hz = f_ghz * 1e9;
    const WireModel model = bench_dipole(1.0, 1e-3, cfg.segments_per_wavelength, f_hz);
    std::printf("mesh: %zu segments (%d per wavelength at %.2f GHz)\n", model.segments.size(),
                cfg.segments_per_wavelength, f_ghz);

    // --- assembly ---------------------------------------------------------
    double t_par = 0.0, t_ser = 0.0;
    MomMatrix z_par, z_ser;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        z_par = assemble(model, f_hz, cfg);
        t_par += seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        z_ser = assemble_reference(model, f_hz, cfg);
        t_ser += seconds_since(t0);
    }
    const double d_asm = max_entry_diff(z_par, z_ser);
    std::printf("assemble          %4zu basis  serial %8.1f ms  parallel %8.1f ms  "
                "speedup %5.2fx  max|diff| %.3g\n",
                z_par.n, 1e3 * t_ser / reps, 1e3 * t_par / reps, t_ser / t_par, d_asm);

    // --- sweep ------------------------------------------------------------
    const FrequencyGrid grid(0.5e9, f_hz, sweep_points);
    auto t0 = std::chrono::steady_clock::now();
    const ImpedanceSweep s_par = impedance_sweep(model, grid, cfg);
    const double tp = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const ImpedanceSweep s_ser = impedance_sweep_reference(model, grid, cfg);
    const double ts = seconds_since(t0);
    const double d_sweep = max_sweep_diff(s_par, s_ser);
    std::printf("impedance_sweep   %4zu points  serial %8.1f ms  parallel %8.1f ms  "
                "speedup %5.2fx  max|diff| %.3g ohm\n",
                grid.size(), 1e3 * ts, 1e3 * tp, ts / tp, d_sweep);

    // Entry-identical assembly is the design contract; the sweep allows for
    // the LU pivot order being sensitive to last-bit assembly differences.
    if (d_asm > 0.0 || d_sweep > 1e-9) {
        std::fprintf(stderr, "bench: OpenMP and serial paths disagree\n");
        return 1;
    }
    return 0;
}
