#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "qrad/core.hpp"

// Qubit planar geometries and their Babinet wire duals. The gap (slot)
// pattern of each device maps to a thin-wire model running along the slot
// centerline, with strip width w replaced by an equivalent round wire of
// radius w/4, embedded in the swapped medium (mu_rel = eps_eff).

namespace qrad {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& a);
double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

// Disk island of radius r_island inside an annular gap of width gap_w; the
// dual is a polygonal loop at the gap centerline, r = r_island + gap_w/2.
struct CircularTransmon {
    double r_island_m = 0.0;
    double gap_w_m = 0.0;
};

// Rectangular island; the dual is the slot-centerline ring, electrically a
// folded dipole (two long branches shorted by the short sides).
struct RectangularTransmon {
    double length_l_m = 0.0;
    double width_w_m = 0.0;
    double gap_w_m = 0.0;
};

// Cross-shaped island with arm length arm_l, trace width trace_s, gap gap_w.
// The dual is a four-arm star of slot-centerline strips meeting at the
// center (tip-to-tip span 2 arm_l + trace_s + gap_w), with the delta-gap
// feed in series with one arm at the hub.
struct XmonTransmon {
    double arm_l_m = 0.0;
    double trace_s_m = 0.0;
    double gap_w_m = 0.0;
};

// Two-island differential transmon; the dual is a doubled folded dipole:
// a fed branch between the islands and a return branch along each island
// mid-line, shorted together at both ends.
struct DifferentialTransmon {
    double island_l_m = 0.0;
    double island_w_m = 0.0;
    double gap_w_m = 0.0;
    double island_sep_m = 0.0;
};

// 3D transmon pads form a center-fed strip dipole of total length
// 2 pad_l + feed_gap with per-pad equivalent radius pad_w/4. Already a wire
// antenna; no slot complement involved.
struct ThreeDTransmon {
    double pad_l_m = 0.0;
    double pad_w_m = 0.0;
    double feed_gap_m = 0.0;
};

using DeviceShape = std::variant<CircularTransmon, RectangularTransmon, XmonTransmon,
                                 DifferentialTransmon, ThreeDTransmon>;

struct QubitGeometry {
    DeviceShape shape;
    double substrate_eps = 1.0;
};

struct Segment {
    Vec3 p0, p1;
    double radius_m = 0.0;

    double length() const { return norm(p1 - p0); }
    Vec3 midpoint() const { return 0.5 * (p0 + p1); }
    Vec3 unit_tangent() const;
};

enum class TopologyTag { loop, folded_dipole, doubled_folded_dipole, dipole, xmon_cross };

std::string to_string(TopologyTag tag);

// Thin-wire model. The delta-gap feed sits at the end node (p1) of
// segments[feed_segment_index]; builders put that node at the physical
// junction location. Discretization preserves it.
struct WireModel {
    std::vector<Segment> segments;
    std::size_t feed_segment_index = 0;
    Medium medium;
    TopologyTag topology_tag = TopologyTag::dipole;

    // min_len_radii is the slenderness floor: physical wires must satisfy
    // a < len/5, while discretized pieces only need the kernel-validity
    // floor a < len/2 (the mesher is allowed to cut below len/5).
    void validate(double min_len_radii = 5.0) const;
    double total_length() const;
    double min_radius() const;
    double max_radius() const;
};

// Build the dual wire model. loop_facets controls the polygonal
// approximation of circular loops (reduced automatically when the wire
// radius would violate thin-wire validity).
WireModel build_dual_wire_model(const QubitGeometry& g, int loop_facets = 64);

// Subdivide every wire so each MoM segment is at most lambda_min /
// segments_per_wavelength, with lambda_min the in-medium wavelength at
// f_max. Rejects subdivisions finer than twice the wire radius, where the
// thin-wire kernel breaks down.
WireModel discretize(const WireModel& model, int segments_per_wavelength, double f_max_hz);

}  // namespace qrad
