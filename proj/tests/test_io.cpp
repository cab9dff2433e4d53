#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"

#include "qrad/core.hpp"
#include "qrad/io.hpp"
#include "qrad/matching.hpp"
#include "qrad/svg.hpp"

using namespace qrad;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "qrad_io_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MatchReport toy_match_report() {
    const FrequencyGrid grid(90e9, 110e9, 5);
    ImpedanceSweep ap(grid, {cplx{100, -50}, cplx{150, -20}, cplx{200, 0},
                             cplx{150, 20}, cplx{100, 50}},
                      SpaceTag::aperture);
    JunctionModel j{7000.0, 9e-15};
    return match_report(ap, j);
}

}  // namespace

TEST_CASE("geometry parsing: every variant lands in the right shape struct") {
    const QubitGeometry circ = parse_geometry(
        R"({"variant":"circular","r_island_um":154.155,"gap_w_um":10,"substrate_eps":11})");
    const auto* c = std::get_if<CircularTransmon>(&circ.shape);
    REQUIRE(c != nullptr);
    CHECK(c->r_island_m == doctest::Approx(154.155e-6).epsilon(1e-12));
    CHECK(c->gap_w_m == doctest::Approx(10e-6).epsilon(1e-12));
    CHECK(circ.substrate_eps == 11.0);

    const QubitGeometry rect = parse_geometry(
        R"({"variant":"rectangular","length_l_um":400,"width_w_um":200,"gap_w_um":24,"substrate_eps":11})");
    const auto* r = std::get_if<RectangularTransmon>(&rect.shape);
    REQUIRE(r != nullptr);
    CHECK(r->length_l_m == doctest::Approx(400e-6).epsilon(1e-12));

    const QubitGeometry xm = parse_geometry(
        R"({"variant":"xmon","arm_l_um":165,"trace_s_um":24,"gap_w_um":24,"substrate_eps":11})");
    const auto* x = std::get_if<XmonTransmon>(&xm.shape);
    REQUIRE(x != nullptr);
    CHECK(x->arm_l_m == doctest::Approx(165e-6).epsilon(1e-12));
    CHECK(x->trace_s_m == doctest::Approx(24e-6).epsilon(1e-12));

    const QubitGeometry diff = parse_geometry(
        R"({"variant":"differential","island_l_um":900,"island_w_um":200,"gap_w_um":30,"island_sep_um":30,"substrate_eps":11})");
    const auto* d = std::get_if<DifferentialTransmon>(&diff.shape);
    REQUIRE(d != nullptr);
    CHECK(d->island_sep_m == doctest::Approx(30e-6).epsilon(1e-12));

    const QubitGeometry td = parse_geometry(
        R"({"variant":"3d","pad_l_um":126,"pad_w_um":10,"feed_gap_um":15,"substrate_eps":1})");
    const auto* t = std::get_if<ThreeDTransmon>(&td.shape);
    REQUIRE(t != nullptr);
    CHECK(t->pad_l_m == doctest::Approx(126e-6).epsilon(1e-12));
}

TEST_CASE("geometry parsing rejects malformed documents loudly") {
    // Typos must not be silently ignored.
    CHECK_THROWS_WITH_AS(
        parse_geometry(
            R"({"variant":"xmon","arm_length_um":165,"trace_s_um":24,"gap_w_um":24,"substrate_eps":11})"),
        doctest::Contains("unknown key"), ConfigError);
    // Missing required fields.
    CHECK_THROWS_AS(parse_geometry(R"({"variant":"circular","substrate_eps":11})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_geometry(
                        R"({"variant":"circular","r_island_um":100,"gap_w_um":10})"),
                    ConfigError);
    // Wrong types, unknown variant, junk input.
    CHECK_THROWS_AS(parse_geometry(
                        R"({"variant":"circular","r_island_um":"wide","gap_w_um":10,"substrate_eps":11})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_geometry(
                        R"({"variant":"pentagon","r_island_um":100,"gap_w_um":10,"substrate_eps":11})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_geometry("not json at all"), ConfigError);
    CHECK_THROWS_AS(parse_geometry("[1,2,3]"), ConfigError);
    // Sub-unity substrate.
    CHECK_THROWS_AS(parse_geometry(
                        R"({"variant":"circular","r_island_um":100,"gap_w_um":10,"substrate_eps":0.5})"),
                    ConfigError);
}

TEST_CASE("geometry files: load_geometry reads what parse_geometry parses") {
    const fs::path p = scratch_dir() / "geo.json";
    std::ofstream(p) << R"({"variant":"xmon","arm_l_um":130,"trace_s_um":8,"gap_w_um":4,"substrate_eps":11})";
    const QubitGeometry g = load_geometry(p);
    CHECK(std::holds_alternative<XmonTransmon>(g.shape));
    CHECK_THROWS_AS(load_geometry(scratch_dir() / "does_not_exist.json"), ConfigError);
}

TEST_CASE("junction parsing: direct capacitance, area form and gap override") {
    const JunctionModel direct = parse_junction(R"({"R_n_ohm":7000,"C_j_fF":9})");
    CHECK(direct.r_n_ohm == 7000.0);
    CHECK(direct.c_j_f == doctest::Approx(9e-15).epsilon(1e-12));
    CHECK(direct.gap_voltage_2delta_v == doctest::Approx(380e-6).epsilon(1e-12));

    const JunctionModel area =
        parse_junction(R"({"R_n_ohm":7000,"area_um2":0.12,"specific_c_fF_um2":75})");
    CHECK(area.c_j_f == doctest::Approx(9e-15).epsilon(1e-9));

    const JunctionModel gap =
        parse_junction(R"({"R_n_ohm":5000,"C_j_fF":5,"gap_2delta_uV":400})");
    CHECK(gap.gap_voltage_2delta_v == doctest::Approx(400e-6).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(parse_junction(R"({"R_n_ohm":7000,"C_j_fF":9,"Cj_fF":9})"),
                         doctest::Contains("unknown key"), ConfigError);
    // Exactly one capacitance specification.
    CHECK_THROWS_AS(parse_junction(R"({"R_n_ohm":7000})"), ConfigError);
    CHECK_THROWS_AS(parse_junction(R"({"R_n_ohm":7000,"C_j_fF":9,"area_um2":0.12})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_junction(R"({"R_n_ohm":7000,"specific_c_fF_um2":75})"),
                    ConfigError);
}

TEST_CASE("impedance csv: header, rows, optional junction columns, bit-stable") {
    const FrequencyGrid grid(1e9, 3e9, 3);
    const ImpedanceSweep rad(grid, {cplx{73, 42.5}, cplx{100, 0}, cplx{50, -25}},
                             SpaceTag::wire);
    const fs::path p3 = scratch_dir() / "sweep3.csv";
    write_impedance_csv(p3, rad);
    const std::string body3 = slurp(p3);
    CHECK(body3.rfind("f_Hz,Re_Zrad,Im_Zrad\n", 0) == 0);
    CHECK(std::count(body3.begin(), body3.end(), '\n') == 4);  // header + 3 rows
    CHECK(body3.find("42.5") != std::string::npos);

    const ImpedanceSweep jct(grid, {cplx{4.5, -176.8}, cplx{4.5, -176.8}, cplx{4.5, -176.8}},
                             SpaceTag::aperture);
    const fs::path p5 = scratch_dir() / "sweep5.csv";
    write_impedance_csv(p5, rad, &jct);
    CHECK(slurp(p5).rfind("f_Hz,Re_Zrad,Im_Zrad,Re_Zj,Im_Zj\n", 0) == 0);

    // Same input twice -> byte-identical output.
    const fs::path p3b = scratch_dir() / "sweep3b.csv";
    write_impedance_csv(p3b, rad);
    CHECK(slurp(p3b) == body3);

    const ImpedanceSweep longer(FrequencyGrid(1e9, 4e9, 4),
                                {cplx{1, 0}, cplx{1, 0}, cplx{1, 0}, cplx{1, 0}},
                                SpaceTag::aperture);
    CHECK_THROWS_AS(write_impedance_csv(scratch_dir() / "bad.csv", rad, &longer),
                    std::invalid_argument);
}

TEST_CASE("match artifacts: csv columns and json fields round-trip") {
    const MatchReport rep = toy_match_report();
    const fs::path csv = scratch_dir() / "match.csv";
    write_match_csv(csv, rep);
    const std::string body = slurp(csv);
    CHECK(body.rfind("f_Hz,Re_Zrad,Im_Zrad,Re_Zj,Im_Zj,e_c\n", 0) == 0);
    CHECK(std::count(body.begin(), body.end(), '\n') == 1 + 5);

    const fs::path jp = scratch_dir() / "match.json";
    write_match_json(jp, rep);
    const auto j = nlohmann::json::parse(slurp(jp));
    CHECK(j.at("f0_GHz").get<double>() == doctest::Approx(rep.f0_hz / 1e9).epsilon(1e-12));
    CHECK(j.at("delta_f_N_GHz").get<double>() ==
          doctest::Approx(rep.delta_f_n_hz / 1e9).epsilon(1e-12));
    CHECK(j.at("peak_e_c").get<double>() == doctest::Approx(rep.peak_e_c()).epsilon(1e-12));
    CHECK(j.at("Re_Zrad_at_f0_ohm").get<double>() ==
          doctest::Approx(rep.z_rad_at_f0.real()).epsilon(1e-12));
    CHECK(j.at("clip_count").get<std::size_t>() == rep.clip_count);
}

TEST_CASE("poisoning and t1 json artifacts carry the reported fields") {
    PoisoningReport rep;
    rep.f0_hz = 97e9;
    rep.delta_f_n_hz = 1.8e9;
    rep.temperature_k = 0.3;
    rep.gamma_pa_hz = 328.0;
    rep.power_exact_w = 2.0e-20;
    rep.power_approx_w = 2.1e-20;
    const fs::path pp = scratch_dir() / "poison.json";
    write_poisoning_json(pp, rep);
    const auto j = nlohmann::json::parse(slurp(pp));
    CHECK(j.at("f0_GHz").get<double>() == doctest::Approx(97.0).epsilon(1e-12));
    CHECK(j.at("T_mK").get<double>() == doctest::Approx(300.0).epsilon(1e-12));
    CHECK(j.at("gamma_pa_Hz").get<double>() == doctest::Approx(328.0).epsilon(1e-12));
    CHECK(j.at("power_W").get<double>() == doctest::Approx(2.0e-20).epsilon(1e-12));
    CHECK(j.at("power_approx_W").get<double>() == doctest::Approx(2.1e-20).epsilon(1e-12));

    const fs::path tp = scratch_dir() / "t1.json";
    write_t1_json(tp, 1.4e-5, 0.023, 100.0, 6.0, "analytic");
    const auto t = nlohmann::json::parse(slurp(tp));
    CHECK(t.at("T1_s").get<double>() == doctest::Approx(1.4e-5).epsilon(1e-12));
    CHECK(t.at("re_Zw_ohm").get<double>() == doctest::Approx(0.023).epsilon(1e-12));
    CHECK(t.at("r_eff_um").get<double>() == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(t.at("eps_eff").get<double>() == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(t.at("method").get<std::string>() == "analytic");
}

TEST_CASE("currents csv: one block per frequency, midpoint coordinates") {
    WireModel m;
    m.topology_tag = TopologyTag::dipole;
    m.segments = {Segment{{-0.5, 0, 0}, {0, 0, 0}, 1e-3},
                  Segment{{0, 0, 0}, {0.5, 0, 0}, 1e-3}};
    m.feed_segment_index = 0;

    CurrentSolution sol;
    sol.segment_mid_current = {cplx{1.0, 0.5}, cplx{0.25, -0.125}};
    const fs::path p = scratch_dir() / "currents.csv";
    write_currents_csv(p, m, {{1e8, sol}, {2e8, sol}});
    const std::string body = slurp(p);
    CHECK(body.rfind("segment_index,x,y,z,Re_I,Im_I\n", 0) == 0);
    CHECK(body.find("# f_Hz = 100000000") != std::string::npos);
    CHECK(body.find("# f_Hz = 200000000") != std::string::npos);
    CHECK(body.find("-0.25") != std::string::npos);  // first midpoint x
    CHECK(std::count(body.begin(), body.end(), '\n') == 1 + 2 * 3);

    CurrentSolution bad;
    bad.segment_mid_current = {cplx{1.0, 0.0}};
    CHECK_THROWS_AS(write_currents_csv(scratch_dir() / "bad_currents.csv", m, {{1e8, bad}}),
                    std::invalid_argument);
}

TEST_CASE("svg plots: panels, markers, dashes and log axes render") {
    PlotPanel panel;
    panel.title = "radiation resistance";
    panel.x_label = "f (GHz)";
    panel.y_label = "Re Z (ohm)";
    PlotSeries s1{{1, 2, 3, 4}, {10, 40, 20, 5}, "aperture", "#d62728", false};
    PlotSeries s2{{1, 2, 3, 4}, {5, 15, 30, 10}, "junction", "#1f77b4", true};
    panel.series = {s1, s2};
    panel.markers = {PlotMarker{2.5, "f0"}};

    PlotPanel logp;
    logp.title = "rate";
    logp.x_label = "T (K)";
    logp.y_label = "Gamma (Hz)";
    logp.series = {PlotSeries{{0.1, 0.2, 0.3}, {1e-3, 1.0, 1e3}, "rate"}};
    logp.log_y = true;

    const fs::path p = scratch_dir() / "plot.svg";
    write_svg_plot(p, {panel, logp});
    const std::string body = slurp(p);
    CHECK(body.find("<svg") != std::string::npos);
    CHECK(body.find("</svg>") != std::string::npos);
    CHECK(body.find("radiation resistance") != std::string::npos);
    CHECK(body.find("f (GHz)") != std::string::npos);
    CHECK(body.find("aperture") != std::string::npos);
    CHECK(body.find("f0") != std::string::npos);
    CHECK(body.find("stroke-dasharray") != std::string::npos);  // dashed series
}
