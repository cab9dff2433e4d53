// qrad: spurious-antenna analysis of superconducting qubit structures.
//
// Every device is analyzed through the same pipeline: build the Babinet
// wire dual of the layout, sweep its radiation impedance with the
// thin-wire MoM solver, map the sweep to aperture (qubit) space, and
// evaluate the conjugate match against the Josephson junction. On top of
// the match sit the blackbody poisoning rate and the radiative T1 limit.
//
// Exit codes: 0 success, 2 config/usage error, 3 solver error,
// 4 reproduction-tolerance failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "qrad/constants.hpp"
#include "qrad/core.hpp"
#include "qrad/duality.hpp"
#include "qrad/geometry.hpp"
#include "qrad/io.hpp"
#include "qrad/junction.hpp"
#include "qrad/matching.hpp"
#include "qrad/mom.hpp"
#include "qrad/poisoning.hpp"
#include "qrad/radiative_t1.hpp"
#include "qrad/svg.hpp"

namespace fs = std::filesystem;
using namespace qrad;

namespace {

// Shared command-line state; each subcommand binds the subset it needs.
struct RunConfig {
    std::string geometry_path;
    std::string junction_path;
    double f_start_ghz = 20.0;
    double f_stop_ghz = 200.0;
    std::size_t n_points = 181;
    std::string out_dir = ".";
    int segments_per_wavelength = 20;
    std::string dump_currents_path;
    EtaConvention eta = EtaConvention::half_space;

    // poison-specific inputs
    std::optional<double> f0_ghz;
    std::optional<double> delta_f_n_ghz;
    std::optional<double> t_mk;
    std::optional<double> gamma_hz;

    // t1-specific inputs
    double c_qubit_ff = 0.0;
    double f01_ghz = 0.0;
    double eps_eff = 6.0;
    std::optional<double> r_island_um;
    std::optional<double> gap_w_um;
    std::optional<double> area_um2;
    std::string t1_method = "analytic";

    std::string reproduce_id;
};

FrequencyGrid make_grid(const RunConfig& cfg) {
    return FrequencyGrid(cfg.f_start_ghz * 1e9, cfg.f_stop_ghz * 1e9, cfg.n_points);
}

SolverConfig make_solver(const RunConfig& cfg) {
    SolverConfig scfg;
    scfg.segments_per_wavelength = cfg.segments_per_wavelength;
    return scfg;
}

fs::path ensure_out_dir(const RunConfig& cfg) {
    fs::path out(cfg.out_dir);
    fs::create_directories(out);
    return out;
}

std::vector<double> ghz_axis(const FrequencyGrid& grid) {
    std::vector<double> x = grid.frequencies();
    for (double& f : x) f /= 1e9;
    return x;
}

std::vector<double> real_part(const std::vector<cplx>& z) {
    std::vector<double> v(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) v[i] = z[i].real();
    return v;
}

std::vector<double> imag_part(const std::vector<cplx>& z, double sign = 1.0) {
    std::vector<double> v(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) v[i] = sign * z[i].imag();
    return v;
}

// Dual model discretized for the grid plus its aperture-space sweep.
struct AperturePipeline {
    WireModel model;
    ImpedanceSweep aperture;
    double eta_ohm = 0.0;
};

AperturePipeline run_aperture_sweep(const QubitGeometry& g, const FrequencyGrid& grid,
                                    const SolverConfig& scfg, EtaConvention conv) {
    AperturePipeline p;
    p.model = discretize(build_dual_wire_model(g), scfg.segments_per_wavelength, grid.f_stop_hz);
    const ImpedanceSweep wire = impedance_sweep(p.model, grid, scfg);
    p.eta_ohm = resolve_eta(conv, p.model.medium);
    p.aperture = map_sweep_to_aperture(wire, p.eta_ohm);
    return p;
}

// Two stacked panels (Re, Im) of the aperture impedance, optionally
// overlaying the conjugated junction curve Z_j*.
std::vector<PlotPanel> impedance_panels(const ImpedanceSweep& aperture, const ImpedanceSweep* zj,
                                        std::vector<PlotMarker> markers = {}) {
    const std::vector<double> x = ghz_axis(aperture.grid);

    PlotPanel re_panel;
    re_panel.title = "aperture radiation impedance (real part)";
    re_panel.x_label = "f [GHz]";
    re_panel.y_label = "Re Z [ohm]";
    re_panel.series.push_back(PlotSeries{x, real_part(aperture.z), "Re Z_rad", "#1f77b4", false});
    if (zj) re_panel.series.push_back(PlotSeries{x, real_part(zj->z), "Re Z_j*", "#d62728", true});
    re_panel.markers = markers;

    PlotPanel im_panel;
    im_panel.title = "aperture radiation impedance (imaginary part)";
    im_panel.x_label = "f [GHz]";
    im_panel.y_label = "Im Z [ohm]";
    im_panel.series.push_back(PlotSeries{x, imag_part(aperture.z), "Im Z_rad", "#1f77b4", false});
    if (zj) im_panel.series.push_back(PlotSeries{x, imag_part(zj->z, -1.0), "Im Z_j*", "#d62728", true});
    im_panel.markers = std::move(markers);

    return {re_panel, im_panel};
}

std::vector<PlotPanel> match_panels(const MatchReport& rep) {
    const std::vector<double> x = ghz_axis(rep.grid);

    PlotPanel ec_panel;
    ec_panel.title = "junction coupling efficiency";
    ec_panel.x_label = "f [GHz]";
    ec_panel.y_label = "e_c";
    ec_panel.series.push_back(PlotSeries{x, rep.e_c, "e_c", "#1f77b4", false});
    ec_panel.markers.push_back(PlotMarker{rep.f0_hz / 1e9, "f0"});

    PlotPanel z_panel;
    z_panel.title = "radiation impedance vs conjugated junction";
    z_panel.x_label = "f [GHz]";
    z_panel.y_label = "Z [ohm]";
    z_panel.series.push_back(PlotSeries{x, real_part(rep.z_rad), "Re Z_rad", "#1f77b4", false});
    z_panel.series.push_back(PlotSeries{x, real_part(rep.z_j), "Re Z_j*", "#d62728", true});
    z_panel.series.push_back(PlotSeries{x, imag_part(rep.z_rad), "Im Z_rad", "#2ca02c", false});
    z_panel.series.push_back(PlotSeries{x, imag_part(rep.z_j, -1.0), "Im Z_j*", "#9467bd", true});

    return {ec_panel, z_panel};
}

void dump_currents(const WireModel& model, const FrequencyGrid& grid, const SolverConfig& scfg,
                   const fs::path& path) {
    std::vector<std::pair<double, CurrentSolution>> solutions;
    solutions.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        solutions.emplace_back(grid[i], solve_currents(model, grid[i], scfg));
    write_currents_csv(path, model, solutions);
}

int cmd_sweep(const RunConfig& cfg) {
    const QubitGeometry g = load_geometry(cfg.geometry_path);
    const FrequencyGrid grid = make_grid(cfg);
    const SolverConfig scfg = make_solver(cfg);
    const AperturePipeline p = run_aperture_sweep(g, grid, scfg, cfg.eta);

    std::optional<ImpedanceSweep> zj;
    if (!cfg.junction_path.empty()) {
        const JunctionModel j = load_junction(cfg.junction_path);
        zj = junction_sweep(j, grid);
    }

    const fs::path out = ensure_out_dir(cfg);
    write_impedance_csv(out / "sweep.csv", p.aperture, zj ? &*zj : nullptr);
    write_svg_plot(out / "sweep.svg", impedance_panels(p.aperture, zj ? &*zj : nullptr));
    if (!cfg.dump_currents_path.empty())
        dump_currents(p.model, grid, scfg, cfg.dump_currents_path);

    std::printf("sweep: %s dual, %zu segments, eta = %.2f ohm\n",
                to_string(p.model.topology_tag).c_str(), p.model.segments.size(), p.eta_ohm);
    std::printf("  wrote %s and %s\n", (out / "sweep.csv").c_str(), (out / "sweep.svg").c_str());
    return 0;
}

int cmd_match(const RunConfig& cfg) {
    const QubitGeometry g = load_geometry(cfg.geometry_path);
    const JunctionModel j = load_junction(cfg.junction_path);
    const FrequencyGrid grid = make_grid(cfg);
    const SolverConfig scfg = make_solver(cfg);
    const AperturePipeline p = run_aperture_sweep(g, grid, scfg, cfg.eta);
    const MatchReport rep = match_report(p.aperture, j);

    const fs::path out = ensure_out_dir(cfg);
    write_match_csv(out / "match.csv", rep);
    write_match_json(out / "match.json", rep);
    write_svg_plot(out / "match.svg", match_panels(rep));
    if (!cfg.dump_currents_path.empty())
        dump_currents(p.model, grid, scfg, cfg.dump_currents_path);

    std::printf("match: f0 = %.3f GHz, peak e_c = %.4f, delta_f_N = %.3f GHz (clipped %zu)\n",
                rep.f0_hz / 1e9, rep.peak_e_c(), rep.delta_f_n_hz / 1e9, rep.clip_count);
    std::printf("  wrote %s, %s, %s\n", (out / "match.csv").c_str(), (out / "match.json").c_str(),
                (out / "match.svg").c_str());
    return 0;
}

int cmd_poison(const RunConfig& cfg) {
    PoisoningReport report;

    if (!cfg.geometry_path.empty()) {
        // Full chain: device match first, then the blackbody rate at T.
        if (cfg.junction_path.empty())
            throw ConfigError("poison with --geometry also needs --junction");
        if (!cfg.t_mk) throw ConfigError("poison with --geometry needs --t-mk");
        if (cfg.f0_ghz || cfg.delta_f_n_ghz || cfg.gamma_hz)
            throw ConfigError(
                "poison takes either a device (--geometry ...) or a direct match "
                "(--f0-ghz, --delta-f-n-ghz), not both");
        const QubitGeometry g = load_geometry(cfg.geometry_path);
        const JunctionModel j = load_junction(cfg.junction_path);
        const FrequencyGrid grid = make_grid(cfg);
        const AperturePipeline p = run_aperture_sweep(g, grid, make_solver(cfg), cfg.eta);
        report = poisoning_report(match_report(p.aperture, j), *cfg.t_mk * 1e-3);
    } else {
        if (!cfg.f0_ghz || !cfg.delta_f_n_ghz)
            throw ConfigError("poison needs --f0-ghz and --delta-f-n-ghz (or --geometry)");
        if (cfg.t_mk.has_value() == cfg.gamma_hz.has_value())
            throw ConfigError("poison needs exactly one of --t-mk and --gamma-hz");
        report.f0_hz = *cfg.f0_ghz * 1e9;
        report.delta_f_n_hz = *cfg.delta_f_n_ghz * 1e9;
        if (cfg.t_mk) {
            report.temperature_k = *cfg.t_mk * 1e-3;
            report.gamma_pa_hz =
                poisoning_rate(report.f0_hz, report.delta_f_n_hz, report.temperature_k);
        } else {
            report.gamma_pa_hz = *cfg.gamma_hz;
            report.temperature_k =
                effective_temperature(report.f0_hz, report.delta_f_n_hz, report.gamma_pa_hz);
        }
        // Narrowband absorbed power; no e_c curve to integrate in this mode.
        const double p_nb =
            blackbody_psd(report.f0_hz, report.temperature_k) * report.delta_f_n_hz;
        report.power_exact_w = p_nb;
        report.power_approx_w = p_nb;
    }

    const fs::path out = ensure_out_dir(cfg);
    write_poisoning_json(out / "poison.json", report);
    std::printf("poison: f0 = %.3f GHz, delta_f_N = %.3f GHz, T = %.1f mK, Gamma_pa = %.4g Hz\n",
                report.f0_hz / 1e9, report.delta_f_n_hz / 1e9, report.temperature_k * 1e3,
                report.gamma_pa_hz);
    std::printf("  wrote %s\n", (out / "poison.json").c_str());
    return 0;
}

int cmd_t1(const RunConfig& cfg) {
    T1Config t1cfg;
    t1cfg.c_qubit_f = cfg.c_qubit_ff * 1e-15;
    t1cfg.f01_hz = cfg.f01_ghz * 1e9;
    t1cfg.eps_eff = cfg.eps_eff;

    const bool circular = cfg.r_island_um.has_value();
    if (circular == cfg.area_um2.has_value())
        throw ConfigError("t1 needs exactly one island description: "
                          "--r-island-um/--gap-w-um or --area-um2");
    double t1_s = 0.0;
    double re_zw = 0.0;
    double r_eff_um = 0.0;
    std::string method = cfg.t1_method;

    if (circular) {
        if (!cfg.gap_w_um) throw ConfigError("circular island needs --gap-w-um");
        t1cfg.kind = IslandKind::circular;
        t1cfg.circular = CircularIsland{*cfg.r_island_um * 1e-6, *cfg.gap_w_um * 1e-6};
        if (cfg.t1_method == "mom") {
            const T1MomResult res = t1_mom_loop(t1cfg);
            t1_s = res.t1_s;
            re_zw = res.re_zw_ohm;
            // the dual loop runs along the gap centerline
            r_eff_um = *cfg.r_island_um + 0.5 * *cfg.gap_w_um;
        } else {
            t1_s = t1_analytic_loop(t1cfg);
            re_zw = eta0 * eta0 * t1cfg.c_qubit_f / (4.0 * t1_s);
            r_eff_um = *cfg.r_island_um;
        }
    } else {
        if (cfg.t1_method == "mom")
            throw ConfigError("t1 --method mom needs a circular island");
        t1cfg.kind = IslandKind::arbitrary;
        t1cfg.arbitrary = ArbitraryIsland{*cfg.area_um2 * 1e-12};
        t1_s = t1_arbitrary_island(t1cfg);
        re_zw = eta0 * eta0 * t1cfg.c_qubit_f / (4.0 * t1_s);
        r_eff_um = std::sqrt(*cfg.area_um2 / pi);
        method = "analytic-area";
    }

    const fs::path out = ensure_out_dir(cfg);
    write_t1_json(out / "t1.json", t1_s, re_zw, r_eff_um, t1cfg.eps_eff, method);
    std::printf("t1: T1 = %.4g s (Re Z_w = %.4g ohm, r_eff = %.4g um, eps_eff = %g, %s)\n", t1_s,
                re_zw, r_eff_um, t1cfg.eps_eff, method.c_str());
    std::printf("  wrote %s\n", (out / "t1.json").c_str());
    return 0;
}

// ---------------------------------------------------------------------------
// reproduce: canned device configs and closed-form worked numbers, each
// checked against its reference window. Known model deviations are reported
// honestly (they fail the run) and annotated; see README.

struct CheckRow {
    std::string group;
    std::string name;
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::string unit;
    std::string note;

    bool pass() const { return value >= lo && value <= hi; }
};

struct DeviceResult {
    AperturePipeline pipeline;
    JunctionModel junction;
    MatchReport report;
};

class ReproduceRunner {
   public:
    explicit ReproduceRunner(fs::path out) : out_(std::move(out)) {}

    void run(const std::string& id) {
        if (id == "all") {
            for (const char* g : {"fig1c", "fig3", "fig4", "fig5", "fig6", "s5", "s6"}) group(g);
            return;
        }
        group(id);
    }

    const std::vector<CheckRow>& rows() const { return rows_; }

   private:
    static constexpr double kXmonTol = 0.15;  // widened: thin-wire dual vs planar device

    DeviceResult make_device(const DeviceShape& shape, double f_stop_ghz, std::size_t n_points,
                             double f_start_ghz = 20.0) const {
        QubitGeometry g;
        g.shape = shape;
        g.substrate_eps = 11.0;  // eps_eff = 6
        const FrequencyGrid grid(f_start_ghz * 1e9, f_stop_ghz * 1e9, n_points);
        DeviceResult d;
        d.pipeline = run_aperture_sweep(g, grid, SolverConfig{}, EtaConvention::half_space);
        d.junction = JunctionModel{7000.0, 9e-15};
        d.report = match_report(d.pipeline.aperture, d.junction);
        return d;
    }

    const DeviceResult& xmon_a() {
        if (!xmon_a_) xmon_a_ = make_device(XmonTransmon{165e-6, 24e-6, 24e-6}, 180.0, 321);
        return *xmon_a_;
    }
    const DeviceResult& xmon_b() {
        if (!xmon_b_) xmon_b_ = make_device(XmonTransmon{130e-6, 8e-6, 4e-6}, 200.0, 361);
        return *xmon_b_;
    }
    const DeviceResult& differential() {
        if (!diff_)
            diff_ = make_device(DifferentialTransmon{900e-6, 200e-6, 30e-6, 30e-6}, 200.0, 361);
        return *diff_;
    }
    const DeviceResult& three_d() {
        if (!three_d_) three_d_ = make_device(ThreeDTransmon{126e-6, 10e-6, 15e-6}, 1160.0, 571);
        return *three_d_;
    }

    void add_row(std::string group, std::string name, double value, double lo, double hi,
                 std::string unit, std::string note = "") {
        rows_.push_back(CheckRow{std::move(group), std::move(name), value, lo, hi,
                                 std::move(unit), std::move(note)});
    }

    void add_f0_row(const std::string& group, const std::string& label, const DeviceResult& d,
                    double ref_ghz) {
        add_row(group, label + ": peak-e_c frequency", d.report.f0_hz / 1e9,
                (1.0 - kXmonTol) * ref_ghz, (1.0 + kXmonTol) * ref_ghz, "GHz");
    }

    void add_ec_row(const std::string& group, const std::string& label, const DeviceResult& d) {
        add_row(group, label + ": peak e_c", d.report.peak_e_c(), 0.5, 1.0, "");
    }

    void group(const std::string& id) {
        if (id == "fig1c")
            fig1c();
        else if (id == "fig3")
            fig3();
        else if (id == "fig4")
            fig4();
        else if (id == "fig5")
            fig5();
        else if (id == "fig6")
            fig6();
        else if (id == "s5")
            s5();
        else if (id == "s6")
            s6();
        else
            throw ConfigError("unknown reproduce id: " + id);
    }

    void fig1c() {
        const DeviceResult& d = xmon_a();
        const ImpedanceSweep zj = junction_sweep(d.junction, d.pipeline.aperture.grid);
        write_impedance_csv(out_ / "fig1c.csv", d.pipeline.aperture, &zj);
        write_svg_plot(out_ / "fig1c.svg", impedance_panels(d.pipeline.aperture, &zj));
        add_f0_row("fig1c", "Xmon 165/24/24 um", d, 97.0);
        add_ec_row("fig1c", "Xmon 165/24/24 um", d);
    }

    void fig3() {
        // Fixed gap-centerline rectangle 400 x 200 um (perimeter 1.2 mm),
        // slot widths chosen for perimeter/width ratios 100, 50 and 20.
        const double ratios[3] = {100.0, 50.0, 20.0};
        const char* colors[3] = {"#1f77b4", "#d62728", "#2ca02c"};
        const FrequencyGrid grid(20e9, 150e9, 131);
        const std::vector<double> x = ghz_axis(grid);

        PlotPanel re_panel, im_panel;
        re_panel.title = "rectangular transmons: Re Z vs slot aspect ratio";
        im_panel.title = "rectangular transmons: Im Z vs slot aspect ratio";
        for (PlotPanel* p : {&re_panel, &im_panel}) {
            p->x_label = "f [GHz]";
            p->y_label = p == &re_panel ? "Re Z [ohm]" : "Im Z [ohm]";
        }

        int written = 0;
        for (int k = 0; k < 3; ++k) {
            const double gap = 1200e-6 / ratios[k];
            QubitGeometry g;
            g.shape = RectangularTransmon{400e-6 - gap, 200e-6 - gap, gap};
            g.substrate_eps = 11.0;
            const AperturePipeline p =
                run_aperture_sweep(g, grid, SolverConfig{}, EtaConvention::half_space);
            char stem[32];
            std::snprintf(stem, sizeof stem, "fig3_pw%.0f", ratios[k]);
            write_impedance_csv(out_ / (std::string(stem) + ".csv"), p.aperture);
            char label[32];
            std::snprintf(label, sizeof label, "p/w = %.0f", ratios[k]);
            re_panel.series.push_back(
                PlotSeries{x, real_part(p.aperture.z), label, colors[k], false});
            im_panel.series.push_back(
                PlotSeries{x, imag_part(p.aperture.z), label, colors[k], false});
            ++written;
        }
        write_svg_plot(out_ / "fig3.svg", {re_panel, im_panel});
        add_row("fig3", "rectangular family: aspect ratios 100/50/20 swept",
                static_cast<double>(written), 3.0, 3.0, "curves");
    }

    void fig4() {
        const std::pair<const DeviceResult*, const char*> devices[] = {{&xmon_a(), "xmon_a"},
                                                                       {&xmon_b(), "xmon_b"}};
        for (const auto& [d, tag] : devices) {
            write_match_csv(out_ / (std::string("fig4_") + tag + ".csv"), d->report);
            write_match_json(out_ / (std::string("fig4_") + tag + ".json"), d->report);
            write_svg_plot(out_ / (std::string("fig4_") + tag + ".svg"), match_panels(d->report));
        }
        add_row("fig4", "Xmon 165/24/24 um: noise bandwidth", xmon_a().report.delta_f_n_hz / 1e9,
                1.0, 5.0, "GHz", "known thin-wire-dual deviation; see README");
        add_f0_row("fig4", "Xmon 130/8/4 um", xmon_b(), 130.0);
        add_ec_row("fig4", "Xmon 130/8/4 um", xmon_b());
    }

    void fig5() {
        const DeviceResult& d = differential();
        write_match_csv(out_ / "fig5.csv", d.report);
        write_match_json(out_ / "fig5.json", d.report);
        write_svg_plot(out_ / "fig5.svg", match_panels(d.report));
        add_f0_row("fig5", "differential 900/200/30/30 um", d, 110.0);
        add_row("fig5", "differential 900/200/30/30 um: noise bandwidth",
                d.report.delta_f_n_hz / 1e9, 1.5, 4.5, "GHz");
        add_ec_row("fig5", "differential 900/200/30/30 um", d);
    }

    void fig6() {
        const DeviceResult& d = three_d();
        const double span_m = 2.0 * 126e-6 + 15e-6;  // tip-to-tip dipole length
        const double f_half = c0 / (std::sqrt(6.0) * 2.0 * span_m);

        const std::pair<double, const char*> mark_defs[] = {
            {1.0, "λ/2"}, {3.0, "3λ/2"}, {5.0, "5λ/2"}};
        std::vector<PlotMarker> marks;
        for (const auto& [mult, label] : mark_defs)
            marks.push_back(PlotMarker{mult * f_half / 1e9, label});

        const ImpedanceSweep zj = junction_sweep(d.junction, d.pipeline.aperture.grid);
        write_impedance_csv(out_ / "fig6.csv", d.pipeline.aperture, &zj);
        write_svg_plot(out_ / "fig6.svg", impedance_panels(d.pipeline.aperture, &zj, marks));
        write_match_json(out_ / "fig6_match.json", d.report);

        add_f0_row("fig6", "3D transmon 126/10/15 um", d, 150.0);
        for (double mult : {3.0, 5.0}) {
            const double target_ghz = mult * f_half / 1e9;
            const double found = nearest_local_max_ghz(d.pipeline.aperture, target_ghz);
            char name[80];
            std::snprintf(name, sizeof name, "3D transmon: Re Z_rad peak near %.0fx half-wave",
                          mult);
            add_row("fig6", name, found, 0.85 * target_ghz, 1.15 * target_ghz, "GHz");
        }
        add_ec_row("fig6", "3D transmon 126/10/15 um", d);
    }

    // Frequency (GHz) of the local maximum of Re[Z] closest to target_ghz;
    // 0 when the sweep has no interior local maximum.
    static double nearest_local_max_ghz(const ImpedanceSweep& sweep, double target_ghz) {
        double best = 0.0;
        for (std::size_t i = 1; i + 1 < sweep.z.size(); ++i) {
            const double re = sweep.z[i].real();
            if (re > sweep.z[i - 1].real() && re > sweep.z[i + 1].real()) {
                const double f_ghz = sweep.grid[i] / 1e9;
                if (best == 0.0 || std::abs(f_ghz - target_ghz) < std::abs(best - target_ghz))
                    best = f_ghz;
            }
        }
        return best;
    }

    void s5() {
        // Junction impedance closed form: Z (1 + w^2 tau^2) = R_n (1 - j w tau).
        const JunctionModel j{7000.0, 9e-15};
        double ident = 0.0;
        for (double f_ghz : {1.0, 5.0, 50.0, 97.0, 150.0, 500.0}) {
            const double w = 2.0 * pi * f_ghz * 1e9;
            const double wt = w * j.tau_s();
            const cplx lhs = junction_impedance(j, f_ghz * 1e9) * (1.0 + wt * wt);
            const cplx rhs = j.r_n_ohm * cplx(1.0, -wt);
            ident = std::max(ident, std::abs(lhs - rhs) / j.r_n_ohm);
        }
        add_row("s5", "junction impedance closed-form residual", ident, 0.0, 1e-12, "");

        const cplx zj = junction_impedance(j, 97e9);
        add_row("s5", "conjugate-match reflection magnitude", std::abs(reflection(std::conj(zj), zj)),
                0.0, 1e-12, "");

        const double t_ref = 0.300;
        const double gamma = poisoning_rate(97e9, 1.8e9, t_ref);
        const double t_back = effective_temperature(97e9, 1.8e9, gamma);
        add_row("s5", "rate/temperature round-trip residual", std::abs(t_back - t_ref) / t_ref,
                0.0, 1e-10, "");

        const double t_eff = effective_temperature(97e9, 1.8e9, 300.0);
        add_row("s5", "effective temperature at (97 GHz, 1.8 GHz, 300 Hz)", t_eff * 1e3, 288.0,
                308.0, "mK");

        PoisoningReport rep;
        rep.f0_hz = 97e9;
        rep.delta_f_n_hz = 1.8e9;
        rep.temperature_k = t_eff;
        rep.gamma_pa_hz = 300.0;
        const double p_nb = blackbody_psd(rep.f0_hz, rep.temperature_k) * rep.delta_f_n_hz;
        rep.power_exact_w = p_nb;
        rep.power_approx_w = p_nb;
        write_poisoning_json(out_ / "s5.json", rep);
    }

    void s6() {
        // Radiative T1 of the ideal 100 um loop at 5 GHz with C = 100 fF.
        const double c_q = 100e-15;
        const double f01 = 5e9;
        const double r = 100e-6;
        struct T1Case {
            double eps;
            double ref_s;
            double scale;
            const char* unit;
        };
        const T1Case cases[] = {{1.0, 1.5e-3, 1e3, "ms"}, {6.0, 17e-6, 1e6, "us"}};
        for (const T1Case& tc : cases) {
            const double re_zw = small_loop_radiation_resistance(r, f01, tc.eps);
            const double t1 = t1_from_wire_impedance(c_q, cplx(re_zw, 0.0), eta0);
            char name[80];
            std::snprintf(name, sizeof name, "radiative T1, 100 um loop, eps_eff = %g", tc.eps);
            add_row("s6", name, t1 * tc.scale, 0.98 * tc.ref_s * tc.scale,
                    1.02 * tc.ref_s * tc.scale, tc.unit);
            char stem[32];
            std::snprintf(stem, sizeof stem, "s6_eps%g.json", tc.eps);
            write_t1_json(out_ / stem, t1, re_zw, r * 1e6, tc.eps, "closed-form small loop");
        }
    }

    fs::path out_;
    std::vector<CheckRow> rows_;
    std::optional<DeviceResult> xmon_a_, xmon_b_, diff_, three_d_;
};

int cmd_reproduce(const RunConfig& cfg) {
    const fs::path out = ensure_out_dir(cfg);
    ReproduceRunner runner(out);
    runner.run(cfg.reproduce_id);

    std::vector<std::string> lines;
    std::size_t n_pass = 0;
    for (const CheckRow& row : runner.rows()) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "[%s] %-6s %-55s %12.6g %-4s in [%.6g, %.6g]%s%s",
                      row.pass() ? "PASS" : "FAIL", row.group.c_str(), row.name.c_str(),
                      row.value, row.unit.c_str(), row.lo, row.hi,
                      row.note.empty() ? "" : "  -- ", row.note.c_str());
        lines.emplace_back(buf);
        if (row.pass()) ++n_pass;
    }

    std::printf("reproduce %s: artifacts in %s\n", cfg.reproduce_id.c_str(), out.c_str());
    for (const std::string& line : lines) std::printf("%s\n", line.c_str());
    std::printf("%zu of %zu checks passed\n", n_pass, runner.rows().size());

    std::FILE* f = std::fopen((out / "reproduce_report.txt").c_str(), "w");
    if (f) {
        for (const std::string& line : lines) std::fprintf(f, "%s\n", line.c_str());
        std::fprintf(f, "%zu of %zu checks passed\n", n_pass, runner.rows().size());
        std::fclose(f);
    }
    return n_pass == runner.rows().size() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spurious-antenna analysis of superconducting qubit structures"};
    app.require_subcommand(1);
    RunConfig cfg;

    const std::map<std::string, EtaConvention> eta_names{
        {"wire", EtaConvention::wire},
        {"vacuum", EtaConvention::vacuum},
        {"aperture", EtaConvention::aperture},
        {"half-space", EtaConvention::half_space}};

    auto add_window = [&](CLI::App* sub) {
        sub->add_option("--f-start-ghz", cfg.f_start_ghz, "sweep start frequency [GHz]");
        sub->add_option("--f-stop-ghz", cfg.f_stop_ghz, "sweep stop frequency [GHz]");
        sub->add_option("--n-points", cfg.n_points, "number of sweep points");
        sub->add_option("--segments-per-wavelength", cfg.segments_per_wavelength,
                        "MoM mesh density at the stop frequency");
        sub->add_option("--eta-convention", cfg.eta,
                        "wave impedance entering the wire/aperture mapping")
            ->transform(CLI::CheckedTransformer(eta_names, CLI::ignore_case));
    };
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out_dir, "output directory");
    };

    CLI::App* sweep = app.add_subcommand("sweep", "aperture radiation impedance of a device");
    sweep->add_option("--geometry", cfg.geometry_path, "device geometry JSON")
        ->required()
        ->check(CLI::ExistingFile);
    sweep->add_option("--junction", cfg.junction_path, "junction JSON (overlay Z_j*)")
        ->check(CLI::ExistingFile);
    add_window(sweep);
    add_out(sweep);
    sweep->add_option("--dump-currents", cfg.dump_currents_path,
                      "write solved wire currents to this CSV");

    CLI::App* match = app.add_subcommand("match", "junction conjugate-match report");
    match->add_option("--geometry", cfg.geometry_path, "device geometry JSON")
        ->required()
        ->check(CLI::ExistingFile);
    match->add_option("--junction", cfg.junction_path, "junction JSON")
        ->required()
        ->check(CLI::ExistingFile);
    add_window(match);
    add_out(match);
    match->add_option("--dump-currents", cfg.dump_currents_path,
                      "write solved wire currents to this CSV");

    CLI::App* poison = app.add_subcommand("poison", "photon-assisted poisoning rate");
    poison->add_option("--geometry", cfg.geometry_path, "device geometry JSON (full chain)")
        ->check(CLI::ExistingFile);
    poison->add_option("--junction", cfg.junction_path, "junction JSON (full chain)")
        ->check(CLI::ExistingFile);
    poison->add_option("--f0-ghz", cfg.f0_ghz, "match frequency [GHz] (direct mode)");
    poison->add_option("--delta-f-n-ghz", cfg.delta_f_n_ghz, "noise bandwidth [GHz] (direct mode)");
    poison->add_option("--t-mk", cfg.t_mk, "radiation temperature [mK]");
    poison->add_option("--gamma-hz", cfg.gamma_hz, "observed rate [Hz] (inverts to temperature)");
    add_window(poison);
    add_out(poison);

    CLI::App* t1 = app.add_subcommand("t1", "radiative T1 limit of an electrically small island");
    t1->add_option("--c-qubit-ff", cfg.c_qubit_ff, "qubit shunt capacitance [fF]")->required();
    t1->add_option("--f01-ghz", cfg.f01_ghz, "qubit transition frequency [GHz]")->required();
    t1->add_option("--eps-eff", cfg.eps_eff, "effective permittivity");
    t1->add_option("--r-island-um", cfg.r_island_um, "circular island radius [um]");
    t1->add_option("--gap-w-um", cfg.gap_w_um, "circular island gap width [um]");
    t1->add_option("--area-um2", cfg.area_um2, "island area [um^2] (area-equivalent loop)");
    t1->add_option("--method", cfg.t1_method, "analytic or mom")
        ->check(CLI::IsMember({"analytic", "mom"}));
    add_out(t1);

    CLI::App* reproduce =
        app.add_subcommand("reproduce", "canned device configs checked against reference windows");
    reproduce
        ->add_option("id", cfg.reproduce_id,
                     "one of fig1c, fig3, fig4, fig5, fig6, s5, s6, all")
        ->required()
        ->check(CLI::IsMember({"fig1c", "fig3", "fig4", "fig5", "fig6", "s5", "s6", "all"}));
    add_out(reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*sweep) return cmd_sweep(cfg);
        if (*match) return cmd_match(cfg);
        if (*poison) return cmd_poison(cfg);
        if (*t1) return cmd_t1(cfg);
        if (*reproduce) return cmd_reproduce(cfg);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
