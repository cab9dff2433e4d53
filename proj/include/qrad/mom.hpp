#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qrad/core.hpp"
#include "qrad/geometry.hpp"

// Thin-wire method-of-moments solver for the electric-field integral
// equation. Currents are expanded in overlapping triangle (doublet)
// functions spanning segment pairs at shared nodes and tested Galerkin
// style, which keeps the assembled matrix symmetric to round-off. The
// reduced kernel R = sqrt(d_axis^2 + a_p a_q) regularizes the self and
// near interactions; exact closed-form statics handle the diagonal.

namespace qrad {

class SolverError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class KernelKind {
    reduced,             // graded quadrature everywhere, including the diagonal
    extended_self_term,  // exact static self integrals + quadrature remainder
};

struct SolverConfig {
    int segments_per_wavelength = 20;
    int quadrature_points = 6;
    KernelKind kernel = KernelKind::extended_self_term;
    bool pivoting = true;

    void validate() const;
};

struct MomMatrix {
    std::size_t n = 0;
    Eigen::MatrixXcd entries;  // ohms
    Eigen::VectorXcd rhs;      // volts

    // Checks shape, finiteness and reduced-kernel self-term dominance:
    // |Z_ii| > |Z_ij| whenever |i - j| > n/2.
    void validate(std::size_t min_basis = 3) const;
};

// One half of a doublet: how the basis current lives on a single segment.
struct DoubletLeg {
    std::size_t segment = 0;
    double sigma = 1.0;  // current sign relative to the segment tangent
    int shape = 0;       // 0: (1-u) falling from p0, 1: u rising to p1
    double gamma = 1.0;  // line-charge sign: +1 flowing into node, -1 out
};

// Triangle basis function peaking at `node`, carrying current through it.
struct Doublet {
    std::size_t node = 0;
    DoubletLeg in, out;
};

struct MomMesh {
    std::vector<Vec3> nodes;
    std::vector<std::array<std::size_t, 2>> segment_nodes;  // (p0, p1) node ids
    std::vector<Doublet> doublets;
    // Delta-gap bookkeeping: the source sits in series with the feed segment
    // at its end node. Each entry is (doublet index, ±1): +1 when the feed
    // segment is that doublet's in-leg, −1 when it is its out-leg. The gap
    // voltage excites exactly these doublets, and the gap current is the
    // weighted sum of their amplitudes. At a degree-2 feed node this is the
    // single classic feed doublet; at junction feeds (e.g. a star of strips
    // fed at the hub) two doublets straddle the gap.
    std::vector<std::pair<std::size_t, double>> feed_terms;
};

// Welds coincident segment endpoints into nodes and builds the doublet
// basis: one doublet per interior degree-2 node, d-1 overlapping doublets
// per degree-d junction (segments paired in index order), none at free
// ends. The feed node (p1 of the feed segment) must join at least two
// segments so the gap carries current.
MomMesh build_mesh(const WireModel& m);

// Galerkin impedance matrix with 1 V delta-gap excitation on the feed.
// Every entry is computed independently, so the OpenMP and serial paths
// produce identical values entry by entry.
MomMatrix assemble(const WireModel& m, double f_hz, const SolverConfig& cfg);
MomMatrix assemble_reference(const WireModel& m, double f_hz, const SolverConfig& cfg);

struct CurrentSolution {
    Eigen::VectorXcd coefficients;          // doublet amplitudes, amperes
    std::vector<cplx> segment_mid_current;  // current at each segment midpoint
    cplx z_in;                              // ohms
    double rcond = 0.0;                     // reciprocal condition estimate
};

CurrentSolution solve_currents(const WireModel& m, double f_hz, const SolverConfig& cfg);

cplx input_impedance(const WireModel& m, double f_hz, const SolverConfig& cfg);

// Radiation resistance of the uniform 1 A ring current on a single closed
// loop: the quadratic form x^T Re[Z] x with doublet amplitudes signed to
// circulate consistently. This is the magnetic-dipole-mode resistance of
// the loop (the quantity entering the aperture T1 chain); the point-fed
// input_impedance additionally contains higher-mode radiation driven by
// the localized feed, which grows with kr.
double uniform_loop_resistance(const WireModel& m, double f_hz, const SolverConfig& cfg);

// Per-point impedances over the grid; points are independent and run in
// parallel. Failures carry the offending frequency in the message.
ImpedanceSweep impedance_sweep(const WireModel& m, const FrequencyGrid& grid,
                               const SolverConfig& cfg);
ImpedanceSweep impedance_sweep_reference(const WireModel& m, const FrequencyGrid& grid,
                                         const SolverConfig& cfg);

namespace detail {

// Elemental double integrals over a segment pair:
//   t[i][j] = int_0^1 int_0^1 phi_i(u) phi_j(v) exp(-jkR)/R du dv
// with phi_0 = 1-u, phi_1 = u and the reduced-kernel distance R.
struct PairIntegrals {
    cplx t[2][2]{};
    cplx sum() const { return t[0][0] + t[0][1] + t[1][0] + t[1][1]; }
};

PairIntegrals elemental_integrals(const Segment& sp, const Segment& sq, double k,
                                  int quadrature_points, KernelKind kernel);

// Minimum axis-to-axis distance between two segments.
double segment_distance(const Segment& sp, const Segment& sq);

// Gauss-Legendre rule on [0, 1].
struct QuadRule {
    std::vector<double> x, w;
};
const QuadRule& gauss_rule(int n);

}  // namespace detail

}  // namespace qrad
