#include "qrad/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qrad/constants.hpp"

namespace qrad {

namespace {

using nlohmann::json;

json parse_document(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigError(std::string(what) + ": malformed JSON");
    if (!j.is_object()) throw ConfigError(std::string(what) + ": expected a JSON object");
    return j;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
    for (const auto& item : j.items()) {
        if (!allowed.count(item.key()))
            throw ConfigError(std::string(what) + ": unknown key \"" + item.key() + "\"");
    }
}

double require_number(const json& j, const char* key, const char* what) {
    if (!j.contains(key))
        throw ConfigError(std::string(what) + ": missing key \"" + key + "\"");
    if (!j.at(key).is_number())
        throw ConfigError(std::string(what) + ": key \"" + key + "\" must be a number");
    return j.at(key).get<double>();
}

double um(double v) { return v * 1e-6; }

// Deterministic shortest-exact formatting for bit-stable CSV output.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path.string());
    return out;
}

void dump_json(const std::filesystem::path& path, const json& j) {
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

}  // namespace

QubitGeometry parse_geometry(const std::string& json_text) {
    const json j = parse_document(json_text, "geometry");
    if (!j.contains("variant") || !j.at("variant").is_string())
        throw ConfigError("geometry: missing string key \"variant\"");
    const std::string variant = j.at("variant").get<std::string>();

    QubitGeometry g;
    if (variant == "circular") {
        reject_unknown_keys(j, {"variant", "substrate_eps", "r_island_um", "gap_w_um"},
                            "geometry");
        g.shape = CircularTransmon{um(require_number(j, "r_island_um", "geometry")),
                                   um(require_number(j, "gap_w_um", "geometry"))};
    } else if (variant == "rectangular") {
        reject_unknown_keys(
            j, {"variant", "substrate_eps", "length_l_um", "width_w_um", "gap_w_um"},
            "geometry");
        g.shape = RectangularTransmon{um(require_number(j, "length_l_um", "geometry")),
                                      um(require_number(j, "width_w_um", "geometry")),
                                      um(require_number(j, "gap_w_um", "geometry"))};
    } else if (variant == "xmon") {
        reject_unknown_keys(j, {"variant", "substrate_eps", "arm_l_um", "trace_s_um", "gap_w_um"},
                            "geometry");
        g.shape = XmonTransmon{um(require_number(j, "arm_l_um", "geometry")),
                               um(require_number(j, "trace_s_um", "geometry")),
                               um(require_number(j, "gap_w_um", "geometry"))};
    } else if (variant == "differential") {
        reject_unknown_keys(j,
                            {"variant", "substrate_eps", "island_l_um", "island_w_um", "gap_w_um",
                             "island_sep_um"},
                            "geometry");
        g.shape = DifferentialTransmon{um(require_number(j, "island_l_um", "geometry")),
                                       um(require_number(j, "island_w_um", "geometry")),
                                       um(require_number(j, "gap_w_um", "geometry")),
                                       um(require_number(j, "island_sep_um", "geometry"))};
    } else if (variant == "3d") {
        reject_unknown_keys(j, {"variant", "substrate_eps", "pad_l_um", "pad_w_um", "feed_gap_um"},
                            "geometry");
        g.shape = ThreeDTransmon{um(require_number(j, "pad_l_um", "geometry")),
                                 um(require_number(j, "pad_w_um", "geometry")),
                                 um(require_number(j, "feed_gap_um", "geometry"))};
    } else {
        throw ConfigError("geometry: unknown variant \"" + variant +
                          "\" (expected circular, rectangular, xmon, differential or 3d)");
    }
    g.substrate_eps = require_number(j, "substrate_eps", "geometry");
    if (!(g.substrate_eps >= 1.0))
        throw ConfigError("geometry: substrate_eps must be >= 1");
    return g;
}

QubitGeometry load_geometry(const std::filesystem::path& path) {
    return parse_geometry(read_file(path));
}

JunctionModel parse_junction(const std::string& json_text) {
    const json j = parse_document(json_text, "junction");
    reject_unknown_keys(
        j, {"R_n_ohm", "C_j_fF", "area_um2", "specific_c_fF_um2", "gap_2delta_uV"}, "junction");

    JunctionModel m;
    m.r_n_ohm = require_number(j, "R_n_ohm", "junction");
    const bool has_cj = j.contains("C_j_fF");
    const bool has_area = j.contains("area_um2");
    if (has_cj == has_area)
        throw ConfigError("junction: give exactly one of \"C_j_fF\" or \"area_um2\"");
    if (j.contains("specific_c_fF_um2") && !has_area)
        throw ConfigError("junction: \"specific_c_fF_um2\" requires \"area_um2\"");
    if (has_cj) {
        m.c_j_f = require_number(j, "C_j_fF", "junction") * 1e-15;
    } else {
        const double area = require_number(j, "area_um2", "junction");
        const double spec = j.contains("specific_c_fF_um2")
                                ? require_number(j, "specific_c_fF_um2", "junction")
                                : 75.0;
        m.c_j_f = capacitance_from_area(area, spec);
    }
    if (j.contains("gap_2delta_uV"))
        m.gap_voltage_2delta_v = require_number(j, "gap_2delta_uV", "junction") * 1e-6;
    m.validate();
    return m;
}

JunctionModel load_junction(const std::filesystem::path& path) {
    return parse_junction(read_file(path));
}

void write_impedance_csv(const std::filesystem::path& path, const ImpedanceSweep& rad,
                         const ImpedanceSweep* junction) {
    if (junction && junction->z.size() != rad.z.size())
        throw std::invalid_argument("impedance csv: sweep sizes differ");
    auto out = open_out(path);
    out << "f_Hz,Re_Zrad,Im_Zrad";
    if (junction) out << ",Re_Zj,Im_Zj";
    out << "\n";
    for (std::size_t i = 0; i < rad.z.size(); ++i) {
        out << fmt(rad.grid[i]) << ',' << fmt(rad.z[i].real()) << ',' << fmt(rad.z[i].imag());
        if (junction)
            out << ',' << fmt(junction->z[i].real()) << ',' << fmt(junction->z[i].imag());
        out << "\n";
    }
}

void write_match_csv(const std::filesystem::path& path, const MatchReport& report) {
    auto out = open_out(path);
    out << "f_Hz,Re_Zrad,Im_Zrad,Re_Zj,Im_Zj,e_c\n";
    for (std::size_t i = 0; i < report.e_c.size(); ++i) {
        out << fmt(report.grid[i]) << ',' << fmt(report.z_rad[i].real()) << ','
            << fmt(report.z_rad[i].imag()) << ',' << fmt(report.z_j[i].real()) << ','
            << fmt(report.z_j[i].imag()) << ',' << fmt(report.e_c[i]) << "\n";
    }
}

void write_match_json(const std::filesystem::path& path, const MatchReport& report) {
    json j;
    j["f0_GHz"] = report.f0_hz / 1e9;
    j["delta_f_N_GHz"] = report.delta_f_n_hz / 1e9;
    j["peak_e_c"] = report.peak_e_c();
    j["Re_Zrad_at_f0_ohm"] = report.z_rad_at_f0.real();
    j["Im_Zrad_at_f0_ohm"] = report.z_rad_at_f0.imag();
    j["Re_Zj_at_f0_ohm"] = report.z_j_at_f0.real();
    j["Im_Zj_at_f0_ohm"] = report.z_j_at_f0.imag();
    j["clip_count"] = report.clip_count;
    dump_json(path, j);
}

void write_poisoning_json(const std::filesystem::path& path, const PoisoningReport& report) {
    json j;
    j["f0_GHz"] = report.f0_hz / 1e9;
    j["delta_f_N_GHz"] = report.delta_f_n_hz / 1e9;
    j["T_mK"] = report.temperature_k * 1e3;
    j["gamma_pa_Hz"] = report.gamma_pa_hz;
    j["power_W"] = report.power_exact_w;
    j["power_approx_W"] = report.power_approx_w;
    dump_json(path, j);
}

void write_t1_json(const std::filesystem::path& path, double t1_s, double re_zw_ohm,
                   double r_eff_um, double eps_eff, const std::string& method) {
    json j;
    j["T1_s"] = t1_s;
    j["re_Zw_ohm"] = re_zw_ohm;
    j["r_eff_um"] = r_eff_um;
    j["eps_eff"] = eps_eff;
    j["method"] = method;
    dump_json(path, j);
}

void write_currents_csv(const std::filesystem::path& path, const WireModel& model,
                        const std::vector<std::pair<double, CurrentSolution>>& solutions) {
    auto out = open_out(path);
    out << "segment_index,x,y,z,Re_I,Im_I\n";
    for (const auto& [f_hz, sol] : solutions) {
        if (sol.segment_mid_current.size() != model.segments.size())
            throw std::invalid_argument("currents csv: solution does not match the model");
        out << "# f_Hz = " << fmt(f_hz) << "\n";
        for (std::size_t i = 0; i < model.segments.size(); ++i) {
            const Vec3 mid = model.segments[i].midpoint();
            const cplx cur = sol.segment_mid_current[i];
            out << i << ',' << fmt(mid.x) << ',' << fmt(mid.y) << ',' << fmt(mid.z) << ','
                << fmt(cur.real()) << ',' << fmt(cur.imag()) << "\n";
        }
    }
}

}  // namespace qrad
