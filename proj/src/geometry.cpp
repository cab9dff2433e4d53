#include "qrad/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qrad/constants.hpp"

namespace qrad {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 Segment::unit_tangent() const {
    const Vec3 d = p1 - p0;
    const double l = norm(d);
    if (l <= 0.0) throw std::invalid_argument("segment has zero length");
    return (1.0 / l) * d;
}

void WireModel::validate(double min_len_radii) const {
    if (segments.empty()) throw std::invalid_argument("wire model has no segments");
    if (feed_segment_index >= segments.size())
        throw std::invalid_argument("feed segment index out of range");
    medium.validate();
    for (const auto& s : segments) {
        const double len = s.length();
        if (!std::isfinite(len) || len <= 0.0)
            throw std::invalid_argument("wire model contains a degenerate segment");
        if (!(s.radius_m > 0.0) || !std::isfinite(s.radius_m))
            throw std::invalid_argument("wire radius must be positive and finite");
        if (s.radius_m * min_len_radii >= len)
            throw std::invalid_argument(
                "thin-wire assumption violated: wire radius must be < length/" +
                std::to_string(static_cast<int>(min_len_radii)));
    }
}

double WireModel::total_length() const {
    double acc = 0.0;
    for (const auto& s : segments) acc += s.length();
    return acc;
}

double WireModel::min_radius() const {
    double r = segments.at(0).radius_m;
    for (const auto& s : segments) r = std::min(r, s.radius_m);
    return r;
}

std::string to_string(TopologyTag tag) {
    switch (tag) {
        case TopologyTag::loop: return "loop";
        case TopologyTag::folded_dipole: return "folded_dipole";
        case TopologyTag::doubled_folded_dipole: return "doubled_folded_dipole";
        case TopologyTag::dipole: return "dipole";
        case TopologyTag::xmon_cross: return "xmon_cross";
    }
    throw std::logic_error("unknown topology tag");
}

double WireModel::max_radius() const {
    double r = segments.at(0).radius_m;
    for (const auto& s : segments) r = std::max(r, s.radius_m);
    return r;
}

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

// Polyline helper: append wires between consecutive points.
void append_path(std::vector<Segment>& out, const std::vector<Vec3>& pts, double a) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        out.push_back(Segment{pts[i], pts[i + 1], a});
}

WireModel build_circular(const CircularTransmon& c, double eps_eff, int loop_facets) {
    require_positive(c.r_island_m, "r_island");
    require_positive(c.gap_w_m, "gap_w");
    if (!(c.gap_w_m < 2.0 * c.r_island_m))
        throw std::invalid_argument("gap_w must be smaller than the island diameter");
    const double r = c.r_island_m + 0.5 * c.gap_w_m;
    const double a = 0.25 * c.gap_w_m;

    // Keep each polygon edge comfortably thin-wire valid (edge > 5a).
    const double perimeter = 2.0 * pi * r;
    const int n_max = static_cast<int>(std::floor(perimeter / (5.0 * a)));
    int n = std::min(loop_facets, n_max);
    if (n < 8)
        throw std::invalid_argument(
            "gap too wide relative to the island: cannot form a thin-wire loop");

    WireModel m;
    m.topology_tag = TopologyTag::loop;
    m.medium = wire_dual_medium(eps_eff);
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(n) + 1);
    // Start/close at the feed vertex; the final edge ends there.
    for (int i = 0; i <= n; ++i) {
        const double th = 2.0 * pi * static_cast<double>(i % n) / static_cast<double>(n);
        pts.push_back(Vec3{r * std::cos(th), r * std::sin(th), 0.0});
    }
    append_path(m.segments, pts, a);
    m.feed_segment_index = m.segments.size() - 1;
    m.validate();
    return m;
}

WireModel build_rectangular(const RectangularTransmon& c, double eps_eff) {
    require_positive(c.length_l_m, "length_l");
    require_positive(c.width_w_m, "width_w");
    require_positive(c.gap_w_m, "gap_w");
    if (!(c.gap_w_m < std::min(c.length_l_m, c.width_w_m)))
        throw std::invalid_argument("gap_w must be smaller than the island sides");
    const double hx = 0.5 * (c.length_l_m + c.gap_w_m);
    const double hy = 0.5 * (c.width_w_m + c.gap_w_m);
    const double a = 0.25 * c.gap_w_m;

    WireModel m;
    m.topology_tag = TopologyTag::folded_dipole;
    m.medium = wire_dual_medium(eps_eff);
    // Ring along the gap centerline, fed at the middle of one long side
    // (the junction bridges island and ground plane there).
    const std::vector<Vec3> pts = {
        {0.0, -hy, 0.0}, {hx, -hy, 0.0},  {hx, hy, 0.0},
        {-hx, hy, 0.0},  {-hx, -hy, 0.0}, {0.0, -hy, 0.0},
    };
    append_path(m.segments, pts, a);
    m.feed_segment_index = m.segments.size() - 1;
    m.validate();
    return m;
}

WireModel build_xmon(const XmonTransmon& c, double eps_eff) {
    require_positive(c.arm_l_m, "arm_l");
    require_positive(c.trace_s_m, "trace_s");
    require_positive(c.gap_w_m, "gap_w");
    if (!(c.trace_s_m < c.arm_l_m) || !(c.gap_w_m < c.arm_l_m))
        throw std::invalid_argument("trace_s and gap_w must be smaller than arm_l");
    const double h = 0.5 * (c.trace_s_m + c.gap_w_m);
    const double t = c.arm_l_m + h;
    const double a = 0.25 * c.gap_w_m;

    WireModel m;
    m.topology_tag = TopologyTag::xmon_cross;
    m.medium = wire_dual_medium(eps_eff);
    // Four slot-dual strips meeting at the center, one per arm, each
    // reaching from the hub to the slot centerline beyond the arm tip
    // (tip-to-tip span 2*arm_l plus the center width s + w). The delta-gap
    // source sits in series with the first arm at the hub: that arm then
    // carries the full gap current while the far fields of the transverse
    // pair cancel, which is the radiating mode of this structure.
    m.segments = {
        Segment{{-t, 0.0, 0.0}, {0.0, 0.0, 0.0}, a},  // fed arm, gap at the hub
        Segment{{0.0, 0.0, 0.0}, {t, 0.0, 0.0}, a},
        Segment{{0.0, 0.0, 0.0}, {0.0, t, 0.0}, a},
        Segment{{0.0, 0.0, 0.0}, {0.0, -t, 0.0}, a},
    };
    m.feed_segment_index = 0;
    m.validate();
    return m;
}

WireModel build_differential(const DifferentialTransmon& c, double eps_eff) {
    require_positive(c.island_l_m, "island_l");
    require_positive(c.island_w_m, "island_w");
    require_positive(c.gap_w_m, "gap_w");
    require_positive(c.island_sep_m, "island_sep");
    if (!(c.island_w_m < c.island_l_m) || !(c.island_sep_m < c.island_l_m) ||
        !(c.gap_w_m < c.island_l_m))
        throw std::invalid_argument("island_w, island_sep and gap_w must be smaller than island_l");
    const double hl = 0.5 * c.island_l_m;
    const double d = 0.5 * (c.island_w_m + c.island_sep_m);
    const double a = 0.25 * c.gap_w_m;

    WireModel m;
    m.topology_tag = TopologyTag::doubled_folded_dipole;
    m.medium = wire_dual_medium(eps_eff);
    // Fed branch along the inter-island slot, one return branch per island
    // mid-line, all three shorted at both ends: a doubled folded dipole.
    m.segments = {
        Segment{{-hl, 0.0, 0.0}, {0.0, 0.0, 0.0}, a},   // fed branch, left half
        Segment{{0.0, 0.0, 0.0}, {hl, 0.0, 0.0}, a},    // fed branch, right half
        Segment{{-hl, d, 0.0}, {hl, d, 0.0}, a},        // upper return branch
        Segment{{-hl, -d, 0.0}, {hl, -d, 0.0}, a},      // lower return branch
        Segment{{-hl, -d, 0.0}, {-hl, 0.0, 0.0}, a},    // left short, lower
        Segment{{-hl, 0.0, 0.0}, {-hl, d, 0.0}, a},     // left short, upper
        Segment{{hl, -d, 0.0}, {hl, 0.0, 0.0}, a},      // right short, lower
        Segment{{hl, 0.0, 0.0}, {hl, d, 0.0}, a},       // right short, upper
    };
    m.feed_segment_index = 0;  // ends at the branch center (0,0,0)
    m.validate();
    return m;
}

WireModel build_three_d(const ThreeDTransmon& c, double eps_eff) {
    require_positive(c.pad_l_m, "pad_l");
    require_positive(c.pad_w_m, "pad_w");
    require_positive(c.feed_gap_m, "feed_gap");
    if (!(c.pad_w_m < c.pad_l_m) || !(c.feed_gap_m < 2.0 * c.pad_l_m))
        throw std::invalid_argument("pad_w and feed_gap must be smaller than the pad extent");
    const double half = c.pad_l_m + 0.5 * c.feed_gap_m;
    const double a = 0.25 * c.pad_w_m;

    WireModel m;
    m.topology_tag = TopologyTag::dipole;
    m.medium = wire_dual_medium(eps_eff);
    m.segments = {
        Segment{{-half, 0.0, 0.0}, {0.0, 0.0, 0.0}, a},
        Segment{{0.0, 0.0, 0.0}, {half, 0.0, 0.0}, a},
    };
    m.feed_segment_index = 0;
    m.validate();
    return m;
}

}  // namespace

WireModel build_dual_wire_model(const QubitGeometry& g, int loop_facets) {
    if (!(g.substrate_eps >= 1.0) || !std::isfinite(g.substrate_eps))
        throw std::invalid_argument("substrate_eps must be >= 1");
    if (loop_facets < 8) throw std::invalid_argument("loop_facets must be >= 8");
    const double eps_eff = effective_permittivity(g.substrate_eps);
    return std::visit(
        [&](const auto& shape) -> WireModel {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, CircularTransmon>)
                return build_circular(shape, eps_eff, loop_facets);
            else if constexpr (std::is_same_v<T, RectangularTransmon>)
                return build_rectangular(shape, eps_eff);
            else if constexpr (std::is_same_v<T, XmonTransmon>)
                return build_xmon(shape, eps_eff);
            else if constexpr (std::is_same_v<T, DifferentialTransmon>)
                return build_differential(shape, eps_eff);
            else
                return build_three_d(shape, eps_eff);
        },
        g.shape);
}

WireModel discretize(const WireModel& model, int segments_per_wavelength, double f_max_hz) {
    model.validate();
    require_positive(f_max_hz, "f_max");
    if (segments_per_wavelength < 10)
        throw std::invalid_argument("segments_per_wavelength must be >= 10");

    const double lambda_min = model.medium.wavelength(f_max_hz);
    const double max_len = lambda_min / static_cast<double>(segments_per_wavelength);

    WireModel out;
    out.medium = model.medium;
    out.topology_tag = model.topology_tag;
    for (std::size_t i = 0; i < model.segments.size(); ++i) {
        const Segment& s = model.segments[i];
        const double len = s.length();
        const int n = std::max(1, static_cast<int>(std::ceil(len / max_len)));
        if (len / n < 2.0 * s.radius_m)
            throw std::invalid_argument(
                "discretization would produce segments shorter than twice the wire radius; "
                "reduce segments_per_wavelength or the maximum frequency");
        // Interior nodes computed once so adjacent pieces share them exactly;
        // the final piece reuses p1 so welds stay bitwise coincident.
        Vec3 prev = s.p0;
        for (int k = 1; k <= n; ++k) {
            Vec3 next = (k == n) ? s.p1
                                 : s.p0 + (static_cast<double>(k) / static_cast<double>(n)) *
                                              (s.p1 - s.p0);
            out.segments.push_back(Segment{prev, next, s.radius_m});
            prev = next;
        }
        if (i == model.feed_segment_index)
            out.feed_segment_index = out.segments.size() - 1;  // ends at original p1
    }
    out.validate(2.0);
    return out;
}

}  // namespace qrad
