#include "qrad/mom.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "qrad/constants.hpp"

namespace qrad {

void SolverConfig::validate() const {
    if (segments_per_wavelength < 10)
        throw std::invalid_argument("segments_per_wavelength must be >= 10");
    if (quadrature_points < 4) throw std::invalid_argument("quadrature_points must be >= 4");
    if (quadrature_points > 32) throw std::invalid_argument("quadrature_points must be <= 32");
    if (!pivoting)
        throw std::invalid_argument("only partial-pivoted solves are supported (pivoting = on)");
}

void MomMatrix::validate(std::size_t min_basis) const {
    if (n < min_basis) {
        std::ostringstream os;
        os << "impedance matrix has " << n << " basis functions, need at least " << min_basis;
        throw SolverError(os.str());
    }
    if (entries.rows() != static_cast<Eigen::Index>(n) ||
        entries.cols() != static_cast<Eigen::Index>(n) ||
        rhs.size() != static_cast<Eigen::Index>(n))
        throw SolverError("impedance matrix shape is inconsistent");
    if (!entries.allFinite() || !rhs.allFinite())
        throw SolverError("impedance matrix contains non-finite entries");
    // Reduced-kernel self-term dominance over well-separated basis pairs.
    const auto ni = static_cast<std::ptrdiff_t>(n);
    for (std::ptrdiff_t i = 0; i < ni; ++i) {
        const double dii = std::abs(entries(i, i));
        for (std::ptrdiff_t j = 0; j < ni; ++j) {
            if (2 * std::abs(i - j) <= ni) continue;
            if (!(dii > std::abs(entries(i, j)))) {
                std::ostringstream os;
                os << "self-term dominance violated at (" << i << ", " << j << ")";
                throw SolverError(os.str());
            }
        }
    }
}

namespace detail {

namespace {

QuadRule make_gauss(int n) {
    // Golub-Welsch is overkill; Newton on the Legendre recurrence converges
    // in a handful of iterations at double precision.
    QuadRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.x[i] = 0.5 * (1.0 - x);  // roots come out descending; mirrored below
        r.w[i] = 0.5 * w;
        r.x[n - 1 - i] = 0.5 * (1.0 + x);
        r.w[n - 1 - i] = 0.5 * w;
    }
    return r;
}

}  // namespace

const QuadRule& gauss_rule(int n) {
    if (n < 2 || n > 64) throw std::invalid_argument("gauss rule order out of range");
    thread_local std::array<std::unique_ptr<QuadRule>, 65> cache;
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot) slot = std::make_unique<QuadRule>(make_gauss(n));
    return *slot;
}

namespace {

inline cplx kernel_full(double k, double r) {
    const double kr = k * r;
    return cplx(std::cos(kr), -std::sin(kr)) / r;
}

inline cplx kernel_smooth(double k, double r) {
    // (exp(-jkR) - 1)/R, finite as R -> 0. The real part loses precision
    // for tiny kR, so expand it there.
    const double kr = k * r;
    if (std::abs(kr) < 1e-4) {
        const double re = -0.5 * k * kr * (1.0 - kr * kr / 12.0);
        const double im = -k * (1.0 - kr * kr / 6.0);
        return cplx(re, im);
    }
    return cplx(std::cos(kr) - 1.0, -std::sin(kr)) / r;
}

// Closest points between segments (clamped), returning axis distance.
double closest_params(const Segment& a, const Segment& b, double& s, double& t) {
    const Vec3 d1 = a.p1 - a.p0;
    const Vec3 d2 = b.p1 - b.p0;
    const Vec3 r = a.p0 - b.p0;
    const double A = dot(d1, d1);
    const double E = dot(d2, d2);
    const double F = dot(d2, r);
    const double B = dot(d1, d2);
    const double C = dot(d1, r);
    const double den = A * E - B * B;
    s = (den > 1e-30 * A * E) ? std::clamp((B * F - C * E) / den, 0.0, 1.0) : 0.0;
    t = (E > 0.0) ? std::clamp((B * s + F) / E, 0.0, 1.0) : 0.0;
    s = (A > 0.0) ? std::clamp((B * t - C) / A, 0.0, 1.0) : 0.0;
    const Vec3 diff = (a.p0 + s * d1) - (b.p0 + t * d2);
    return norm(diff);
}

// Panel boundaries graded geometrically (ratio 4) toward the singular end.
std::vector<double> graded_breaks(int n_panels, bool toward_one) {
    std::vector<double> b;
    b.reserve(static_cast<std::size_t>(n_panels) + 1);
    const double total = (std::pow(4.0, n_panels) - 1.0) / 3.0;
    double acc = 0.0;
    b.push_back(0.0);
    for (int kpan = 0; kpan < n_panels; ++kpan) {
        acc += std::pow(4.0, kpan) / total;
        b.push_back(std::min(acc, 1.0));
    }
    b.back() = 1.0;
    if (toward_one) {
        std::vector<double> m(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) m[i] = 1.0 - b[b.size() - 1 - i];
        return m;
    }
    return b;
}

int grading_depth(double seg_len, double a_eff) {
    const int np = static_cast<int>(std::ceil(std::log(seg_len / a_eff) / std::log(4.0))) + 1;
    return std::clamp(np, 3, 7);
}

struct Quad1D {
    std::vector<double> x, w;
};

Quad1D composite_rule(const std::vector<double>& breaks, const QuadRule& base) {
    Quad1D q;
    const std::size_t per = base.x.size();
    q.x.reserve((breaks.size() - 1) * per);
    q.w.reserve((breaks.size() - 1) * per);
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double lo = breaks[p], width = breaks[p + 1] - breaks[p];
        if (width <= 0.0) continue;
        for (std::size_t i = 0; i < per; ++i) {
            q.x.push_back(lo + width * base.x[i]);
            q.w.push_back(width * base.w[i]);
        }
    }
    return q;
}

PairIntegrals integrate_pair(const Segment& sp, const Segment& sq, double k, double a2,
                             const Quad1D& qu, const Quad1D& qv) {
    const Vec3 dp = sp.p1 - sp.p0;
    const Vec3 dq = sq.p1 - sq.p0;
    PairIntegrals out;
    for (std::size_t iu = 0; iu < qu.x.size(); ++iu) {
        const double u = qu.x[iu];
        const Vec3 xu = sp.p0 + u * dp;
        for (std::size_t iv = 0; iv < qv.x.size(); ++iv) {
            const double v = qv.x[iv];
            const Vec3 d = xu - (sq.p0 + v * dq);
            const double r = std::sqrt(dot(d, d) + a2);
            const cplx kw = qu.w[iu] * qv.w[iv] * kernel_full(k, r);
            out.t[0][0] += kw * ((1.0 - u) * (1.0 - v));
            out.t[0][1] += kw * ((1.0 - u) * v);
            out.t[1][0] += kw * (u * (1.0 - v));
            out.t[1][1] += kw * (u * v);
        }
    }
    return out;
}

// Triangle-overlap polynomials: Q_ab(t) = int phi_a(u) phi_b(u - t) du over
// the overlap, summed with the transposed term so only the symmetric
// combinations appear. Q_diag covers (0,0)/(1,1), Q_cross covers (0,1)/(1,0);
// their total is 2(1 - t), the plain overlap measure.
inline double q_overlap_diag(double t) { return 2.0 / 3.0 - t + t * t * t / 3.0; }
inline double q_overlap_cross(double t) { return (1.0 - t * t * t) / 3.0; }

PairIntegrals self_reduced(const Segment& s, double k, int q_pts) {
    // 1D reduction over t = u - v; the full kernel peaks at t = 0 with
    // width ~ a/len, so use graded panels toward zero.
    const double len = s.length();
    const double ahat = s.radius_m / len;
    const QuadRule& base = gauss_rule(q_pts);
    const Quad1D qt = composite_rule(graded_breaks(grading_depth(len, s.radius_m), false), base);
    PairIntegrals out;
    cplx acc_diag = 0.0, acc_cross = 0.0;
    for (std::size_t i = 0; i < qt.x.size(); ++i) {
        const double t = qt.x[i];
        const double rr = len * std::sqrt(t * t + ahat * ahat);
        const cplx g = qt.w[i] * kernel_full(k, rr);
        acc_diag += g * q_overlap_diag(t);
        acc_cross += g * q_overlap_cross(t);
    }
    out.t[0][0] = out.t[1][1] = acc_diag;
    out.t[0][1] = out.t[1][0] = acc_cross;
    return out;
}

PairIntegrals self_extended(const Segment& s, double k, int q_pts) {
    const double len = s.length();
    const double ahat = s.radius_m / len;
    const double s1 = std::sqrt(1.0 + ahat * ahat);

    // Moments M_k = int_0^1 t^k / sqrt(t^2 + ahat^2) dt, closed form.
    const double m0 = std::asinh(1.0 / ahat);
    const double m1 = s1 - ahat;
    const double m3 = (s1 * s1 * s1 - ahat * ahat * ahat) / 3.0 - ahat * ahat * m1;

    // Static part: (1/len) * int Q(t) / sqrt(t^2 + ahat^2) dt, exactly.
    const double stat_diag = ((2.0 / 3.0) * m0 - m1 + m3 / 3.0) / len;
    const double stat_cross = (m0 - m3) / (3.0 * len);

    // Smooth remainder (exp(-jkR) - 1)/R integrated with a plain rule.
    const QuadRule& base = gauss_rule(std::max(q_pts, 8));
    cplx rem_diag = 0.0, rem_cross = 0.0;
    for (std::size_t i = 0; i < base.x.size(); ++i) {
        const double t = base.x[i];
        const double rr = len * std::sqrt(t * t + ahat * ahat);
        const cplx g = base.w[i] * kernel_smooth(k, rr);
        rem_diag += g * q_overlap_diag(t);
        rem_cross += g * q_overlap_cross(t);
    }

    PairIntegrals out;
    out.t[0][0] = out.t[1][1] = stat_diag + rem_diag;
    out.t[0][1] = out.t[1][0] = stat_cross + rem_cross;
    return out;
}

}  // namespace

double segment_distance(const Segment& sp, const Segment& sq) {
    double s = 0.0, t = 0.0;
    return closest_params(sp, sq, s, t);
}

PairIntegrals elemental_integrals(const Segment& sp, const Segment& sq, double k,
                                  int quadrature_points, KernelKind kernel) {
    if (quadrature_points < 2) throw std::invalid_argument("quadrature_points must be >= 2");
    const bool same = sp.p0.x == sq.p0.x && sp.p0.y == sq.p0.y && sp.p0.z == sq.p0.z &&
                      sp.p1.x == sq.p1.x && sp.p1.y == sq.p1.y && sp.p1.z == sq.p1.z;
    if (same) {
        return kernel == KernelKind::extended_self_term ? self_extended(sp, k, quadrature_points)
                                                        : self_reduced(sp, k, quadrature_points);
    }

    const double a2 = sp.radius_m * sq.radius_m;
    const double lp = sp.length(), lq = sq.length();
    double su = 0.0, sv = 0.0;
    const double dmin = closest_params(sp, sq, su, sv);
    const QuadRule& base = gauss_rule(quadrature_points);

    if (dmin >= std::max(lp, lq)) {
        const Quad1D plain{base.x, base.w};
        return integrate_pair(sp, sq, k, a2, plain, plain);
    }
    // Near interaction: grade panels toward the closest approach on each
    // segment, which for touching segments is the shared node.
    const double a_eff = std::sqrt(a2);
    const Quad1D qu =
        composite_rule(graded_breaks(grading_depth(lp, a_eff), su >= 0.5), base);
    const Quad1D qv =
        composite_rule(graded_breaks(grading_depth(lq, a_eff), sv >= 0.5), base);
    return integrate_pair(sp, sq, k, a2, qu, qv);
}

}  // namespace detail

MomMesh build_mesh(const WireModel& m) {
    m.validate(2.0);
    const auto& segs = m.segments;

    // Weld scale: a small fraction of the shortest segment.
    double min_len = segs[0].length();
    for (const auto& s : segs) min_len = std::min(min_len, s.length());
    const double tol2 = std::pow(1e-9 * min_len, 2);

    MomMesh mesh;
    mesh.segment_nodes.resize(segs.size());
    auto node_of = [&](const Vec3& p) -> std::size_t {
        for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
            const Vec3 d = mesh.nodes[i] - p;
            if (dot(d, d) <= tol2) return i;
        }
        mesh.nodes.push_back(p);
        return mesh.nodes.size() - 1;
    };
    for (std::size_t i = 0; i < segs.size(); ++i) {
        mesh.segment_nodes[i] = {node_of(segs[i].p0), node_of(segs[i].p1)};
        if (mesh.segment_nodes[i][0] == mesh.segment_nodes[i][1])
            throw std::invalid_argument("segment endpoints weld to the same node");
    }

    struct Leg {
        std::size_t segment;
        bool at_p1;
    };
    std::vector<std::vector<Leg>> incident(mesh.nodes.size());
    for (std::size_t i = 0; i < segs.size(); ++i) {
        incident[mesh.segment_nodes[i][0]].push_back({i, false});
        incident[mesh.segment_nodes[i][1]].push_back({i, true});
    }

    const std::size_t feed_node = mesh.segment_nodes[m.feed_segment_index][1];
    if (incident[feed_node].size() < 2)
        throw std::invalid_argument("feed node must join at least two segments");

    for (std::size_t v = 0; v < mesh.nodes.size(); ++v) {
        auto& legs = incident[v];
        if (legs.size() < 2) continue;  // free end: current pinned to zero
        std::sort(legs.begin(), legs.end(), [](const Leg& a, const Leg& b) {
            return a.segment != b.segment ? a.segment < b.segment : a.at_p1 < b.at_p1;
        });
        // One doublet per consecutive leg pair: d-1 overlapping unknowns at
        // a degree-d junction enforce current continuity.
        for (std::size_t p = 0; p + 1 < legs.size(); ++p) {
            Doublet d;
            d.node = v;
            const Leg& la = legs[p];
            const Leg& lb = legs[p + 1];
            d.in.segment = la.segment;
            d.in.gamma = 1.0;
            d.in.sigma = la.at_p1 ? 1.0 : -1.0;
            d.in.shape = la.at_p1 ? 1 : 0;
            d.out.segment = lb.segment;
            d.out.gamma = -1.0;
            d.out.sigma = lb.at_p1 ? -1.0 : 1.0;
            d.out.shape = lb.at_p1 ? 1 : 0;
            if (v == feed_node) {
                if (la.segment == m.feed_segment_index)
                    mesh.feed_terms.push_back({mesh.doublets.size(), 1.0});
                else if (lb.segment == m.feed_segment_index)
                    mesh.feed_terms.push_back({mesh.doublets.size(), -1.0});
            }
            mesh.doublets.push_back(d);
        }
    }
    if (mesh.doublets.empty()) throw std::invalid_argument("wire model yields no basis functions");
    if (mesh.feed_terms.empty())
        throw std::invalid_argument("feed segment does not touch any basis function");
    return mesh;
}

namespace {

struct AssemblyContext {
    const WireModel* model;
    const MomMesh* mesh;
    double k;
    cplx pref_a;  // j omega mu / 4pi
    cplx pref_v;  // 1 / (j omega eps 4pi)
    SolverConfig cfg;
};

cplx matrix_entry(const AssemblyContext& ctx, std::size_t mi, std::size_t ni) {
    const Doublet& dm = ctx.mesh->doublets[mi];
    const Doublet& dn = ctx.mesh->doublets[ni];
    const DoubletLeg* legs_m[2] = {&dm.in, &dm.out};
    const DoubletLeg* legs_n[2] = {&dn.in, &dn.out};
    cplx za = 0.0, zv = 0.0;
    for (const DoubletLeg* lp : legs_m) {
        const Segment& sp = ctx.model->segments[lp->segment];
        const Vec3 tp = sp.unit_tangent();
        for (const DoubletLeg* lq : legs_n) {
            const Segment& sq = ctx.model->segments[lq->segment];
            const auto ints = detail::elemental_integrals(sp, sq, ctx.k,
                                                          ctx.cfg.quadrature_points,
                                                          ctx.cfg.kernel);
            const double align = dot(tp, sq.unit_tangent());
            za += lp->sigma * lq->sigma * align * sp.length() * sq.length() *
                  ints.t[lp->shape][lq->shape];
            zv += lp->gamma * lq->gamma * ints.sum();
        }
    }
    return ctx.pref_a * za + ctx.pref_v * zv;
}

void check_discretization(const WireModel& m, double f_hz) {
    if (!(f_hz > 0.0) || !std::isfinite(f_hz))
        throw std::invalid_argument("frequency must be positive and finite");
    const double lambda = m.medium.wavelength(f_hz);
    for (const auto& s : m.segments) {
        const double len = s.length();
        if (len < 2.0 * s.radius_m)
            throw std::invalid_argument("segment shorter than twice its wire radius");
        if (len > lambda / 8.0) {
            std::ostringstream os;
            os << "segment length " << len << " m exceeds lambda/8 at " << f_hz
               << " Hz; discretize the model first";
            throw std::invalid_argument(os.str());
        }
    }
}

MomMatrix assemble_impl(const WireModel& m, double f_hz, const SolverConfig& cfg,
                        const MomMesh& mesh, bool parallel) {
    cfg.validate();
    m.validate(2.0);  // discretized pieces may sit below the physical len/5 rule
    check_discretization(m, f_hz);

    AssemblyContext ctx;
    ctx.model = &m;
    ctx.mesh = &mesh;
    ctx.cfg = cfg;
    const double omega = 2.0 * pi * f_hz;
    ctx.k = m.medium.wavenumber(f_hz);
    const double mu = mu0 * m.medium.mu_rel;
    const double eps = eps0 * m.medium.eps_rel;
    ctx.pref_a = cplx(0.0, omega * mu / (4.0 * pi));
    ctx.pref_v = 1.0 / cplx(0.0, omega * eps * 4.0 * pi);

    const std::size_t n = mesh.doublets.size();
    MomMatrix out;
    out.n = n;
    out.entries.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    out.rhs = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
    for (const auto& [d, w] : mesh.feed_terms)
        out.rhs[static_cast<Eigen::Index>(d)] = w;  // 1 V gap tested by each straddling doublet

    const auto total = static_cast<std::ptrdiff_t>(n * n);
    std::string first_error;
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
        try {
            const auto mi = static_cast<std::size_t>(idx) / n;
            const auto nj = static_cast<std::size_t>(idx) % n;
            out.entries(static_cast<Eigen::Index>(mi), static_cast<Eigen::Index>(nj)) =
                matrix_entry(ctx, mi, nj);
        } catch (const std::exception& e) {
            // Exceptions must not escape the worker threads.
#pragma omp critical
            if (first_error.empty()) first_error = e.what();
        }
    }
    if (!first_error.empty()) throw SolverError("assembly failed: " + first_error);
    return out;
}

CurrentSolution solve_impl(const WireModel& m, double f_hz, const SolverConfig& cfg,
                           bool parallel) {
    const MomMesh mesh = build_mesh(m);
    MomMatrix sys = assemble_impl(m, f_hz, cfg, mesh, parallel);
    sys.validate();

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(sys.entries);
    const double rc = lu.rcond();
    if (!(rc > 1e-14)) {
        std::ostringstream os;
        os << "impedance matrix is numerically singular at " << f_hz
           << " Hz (reciprocal condition " << rc << ")";
        throw SolverError(os.str());
    }

    CurrentSolution sol;
    sol.rcond = rc;
    sol.coefficients = lu.solve(sys.rhs);
    if (!sol.coefficients.allFinite())
        throw SolverError("solution vector contains non-finite currents");

    cplx i_feed = 0.0;  // gap current: weighted amplitudes of the straddling doublets
    for (const auto& [d, w] : mesh.feed_terms)
        i_feed += w * sol.coefficients[static_cast<Eigen::Index>(d)];
    if (std::abs(i_feed) < 1e-30) throw SolverError("feed current vanished; cannot form V/I");
    sol.z_in = 1.0 / i_feed;  // 1 V delta gap
    if (sol.z_in.real() < -0.01) {
        std::ostringstream os;
        os << "negative radiation resistance " << sol.z_in.real() << " ohm at " << f_hz
           << " Hz indicates a solver-quality problem (rcond " << rc << ")";
        throw SolverError(os.str());
    }

    // Midpoint current per segment: both covering doublets contribute half
    // their amplitude, signed along the segment tangent.
    sol.segment_mid_current.assign(m.segments.size(), cplx(0.0, 0.0));
    for (std::size_t d = 0; d < mesh.doublets.size(); ++d) {
        const cplx amp = sol.coefficients[static_cast<Eigen::Index>(d)];
        for (const DoubletLeg* leg : {&mesh.doublets[d].in, &mesh.doublets[d].out})
            sol.segment_mid_current[leg->segment] += 0.5 * leg->sigma * amp;
    }
    return sol;
}

ImpedanceSweep sweep_impl(const WireModel& m, const FrequencyGrid& grid, const SolverConfig& cfg,
                          bool parallel) {
    const auto freqs = grid.frequencies();
    std::vector<cplx> z(freqs.size());
    std::vector<std::string> errors(freqs.size());

    const auto total = static_cast<std::ptrdiff_t>(freqs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t i = 0; i < total; ++i) {
        try {
            // Per-point assembly stays serial: the parallel sweep already
            // spreads points across threads, and the reference sweep must
            // remain fully serial.
            z[static_cast<std::size_t>(i)] =
                solve_impl(m, freqs[static_cast<std::size_t>(i)], cfg, false).z_in;
        } catch (const std::exception& e) {
            std::ostringstream os;
            os << "at " << freqs[static_cast<std::size_t>(i)] << " Hz: " << e.what();
            errors[static_cast<std::size_t>(i)] = os.str();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw SolverError("impedance sweep failed " + e);
    return ImpedanceSweep(grid, std::move(z), SpaceTag::wire);
}

}  // namespace

MomMatrix assemble(const WireModel& m, double f_hz, const SolverConfig& cfg) {
    return assemble_impl(m, f_hz, cfg, build_mesh(m), true);
}

MomMatrix assemble_reference(const WireModel& m, double f_hz, const SolverConfig& cfg) {
    return assemble_impl(m, f_hz, cfg, build_mesh(m), false);
}

CurrentSolution solve_currents(const WireModel& m, double f_hz, const SolverConfig& cfg) {
    return solve_impl(m, f_hz, cfg, true);
}

cplx input_impedance(const WireModel& m, double f_hz, const SolverConfig& cfg) {
    return solve_impl(m, f_hz, cfg, true).z_in;
}

double uniform_loop_resistance(const WireModel& m, double f_hz, const SolverConfig& cfg) {
    const MomMesh mesh = build_mesh(m);
    const std::size_t nb = mesh.doublets.size();
    if (nb != m.segments.size()) {
        throw SolverError("uniform_loop_resistance: model is not a single closed loop "
                          "(doublet count " + std::to_string(nb) + " != segment count " +
                          std::to_string(m.segments.size()) + ")");
    }

    // Each segment carries exactly two triangle halves on a closed loop. Walk
    // the shared segments and pick signs so the assembled current circulates
    // one way: on a shared segment the two doublets must agree in direction.
    std::vector<std::vector<std::pair<std::size_t, double>>> on_segment(m.segments.size());
    for (std::size_t d = 0; d < nb; ++d) {
        on_segment[mesh.doublets[d].in.segment].push_back({d, mesh.doublets[d].in.sigma});
        on_segment[mesh.doublets[d].out.segment].push_back({d, mesh.doublets[d].out.sigma});
    }
    std::vector<double> sign(nb, 0.0);
    sign[0] = 1.0;
    std::vector<std::size_t> stack = {0};
    while (!stack.empty()) {
        const std::size_t d = stack.back();
        stack.pop_back();
        for (const DoubletLeg& leg : {mesh.doublets[d].in, mesh.doublets[d].out}) {
            for (const auto& [other, sig] : on_segment[leg.segment]) {
                if (other == d || sign[other] != 0.0) continue;
                sign[other] = sign[d] * leg.sigma * sig;
                stack.push_back(other);
            }
        }
    }
    for (double s : sign) {
        if (s == 0.0) throw SolverError("uniform_loop_resistance: loop is not connected");
    }

    const MomMatrix sys = assemble(m, f_hz, cfg);
    double r = 0.0;
    for (std::size_t p = 0; p < nb; ++p)
        for (std::size_t q = 0; q < nb; ++q)
            r += sign[p] * sign[q] * sys.entries(static_cast<Eigen::Index>(p),
                                                 static_cast<Eigen::Index>(q)).real();
    return r;
}

ImpedanceSweep impedance_sweep(const WireModel& m, const FrequencyGrid& grid,
                               const SolverConfig& cfg) {
    return sweep_impl(m, grid, cfg, true);
}

ImpedanceSweep impedance_sweep_reference(const WireModel& m, const FrequencyGrid& grid,
                                         const SolverConfig& cfg) {
    return sweep_impl(m, grid, cfg, false);
}

}  // namespace qrad
