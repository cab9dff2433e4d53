#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrad/geometry.hpp"
#include "qrad/junction.hpp"
#include "qrad/matching.hpp"
#include "qrad/mom.hpp"
#include "qrad/poisoning.hpp"

// Config ingestion and artifact output. All config units are explicit in
// the key names (_um, _fF, _ohm, _uV); unknown keys are rejected so typos
// fail loudly instead of silently using defaults. CSV output is written
// with fixed %.17g formatting and is bit-stable across runs.

namespace qrad {

class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Geometry document, e.g.
//   {"variant": "xmon", "arm_l_um": 130, "trace_s_um": 8, "gap_w_um": 4,
//    "substrate_eps": 11}
// Variants: circular (r_island_um, gap_w_um), rectangular (length_l_um,
// width_w_um, gap_w_um), xmon (arm_l_um, trace_s_um, gap_w_um),
// differential (island_l_um, island_w_um, gap_w_um, island_sep_um),
// 3d (pad_l_um, pad_w_um, feed_gap_um). substrate_eps is required.
QubitGeometry parse_geometry(const std::string& json_text);
QubitGeometry load_geometry(const std::filesystem::path& path);

// Junction document: {"R_n_ohm": 7000, "C_j_fF": 9} or
// {"R_n_ohm": 7000, "area_um2": 0.12, "specific_c_fF_um2": 75}, with an
// optional "gap_2delta_uV" (aluminum 380 by default).
JunctionModel parse_junction(const std::string& json_text);
JunctionModel load_junction(const std::filesystem::path& path);

// f_Hz, Re_Zrad, Im_Zrad and, when a junction curve is given, Re_Zj, Im_Zj.
void write_impedance_csv(const std::filesystem::path& path, const ImpedanceSweep& rad,
                         const ImpedanceSweep* junction = nullptr);

// f_Hz, Re_Zrad, Im_Zrad, Re_Zj, Im_Zj, e_c.
void write_match_csv(const std::filesystem::path& path, const MatchReport& report);

void write_match_json(const std::filesystem::path& path, const MatchReport& report);

void write_poisoning_json(const std::filesystem::path& path, const PoisoningReport& report);

void write_t1_json(const std::filesystem::path& path, double t1_s, double re_zw_ohm,
                   double r_eff_um, double eps_eff, const std::string& method);

// Solved currents, one block per frequency separated by `# f_Hz = ...`
// comment lines; columns segment_index, x, y, z, Re_I, Im_I.
void write_currents_csv(const std::filesystem::path& path, const WireModel& model,
                        const std::vector<std::pair<double, CurrentSolution>>& solutions);

}  // namespace qrad
