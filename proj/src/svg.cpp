#include "qrad/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace qrad {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Round a raw step to 1/2/5 x 10^k for readable tick labels.
double nice_step(double range, int target_ticks) {
    if (!(range > 0.0)) return 1.0;
    const double raw = range / std::max(1, target_ticks);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    double nice = 10.0;
    if (frac <= 1.0) nice = 1.0;
    else if (frac <= 2.0) nice = 2.0;
    else if (frac <= 5.0) nice = 5.0;
    return nice * mag;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void grow(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    bool ok() const { return lo < hi; }
};

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_svg_plot(const std::filesystem::path& path, const std::vector<PlotPanel>& panels,
                    int width, int panel_height) {
    if (panels.empty()) throw std::invalid_argument("svg plot needs at least one panel");
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());

    const int total_h = panel_height * static_cast<int>(panels.size());
    const double ml = 78, mr = 24, mt = 40, mb = 52;

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << total_h << "\" viewBox=\"0 0 " << width << " " << total_h << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t p = 0; p < panels.size(); ++p) {
        const PlotPanel& panel = panels[p];
        const double top = static_cast<double>(p) * panel_height + mt;
        const double bottom = static_cast<double>(p + 1) * panel_height - mb;
        const double left = ml, right = width - mr;

        Range xr, yr;
        for (const auto& s : panel.series) {
            for (double v : s.x) xr.grow(v);
            for (double v : s.y) yr.grow(panel.log_y ? (v > 0 ? std::log10(v) : NAN) : v);
        }
        for (const auto& m : panel.markers) xr.grow(m.x);
        if (!xr.ok()) { xr.lo = 0; xr.hi = 1; }
        if (!yr.ok()) { yr.lo = 0; yr.hi = 1; }
        const double ypad = 0.05 * (yr.hi - yr.lo);
        yr.lo -= ypad;
        yr.hi += ypad;

        auto sx = [&](double v) { return left + (v - xr.lo) / (xr.hi - xr.lo) * (right - left); };
        auto sy = [&](double v) {
            const double t = panel.log_y ? (v > 0 ? std::log10(v) : yr.lo) : v;
            return bottom - (t - yr.lo) / (yr.hi - yr.lo) * (bottom - top);
        };

        out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
        out << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\""
            << num(right - left) << "\" height=\"" << num(bottom - top)
            << "\" fill=\"none\" stroke=\"#333\"/>\n";
        if (!panel.title.empty())
            out << "<text x=\"" << num((left + right) / 2) << "\" y=\"" << num(top - 14)
                << "\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(panel.title)
                << "</text>\n";

        const double xstep = nice_step(xr.hi - xr.lo, 6);
        for (double t = std::ceil(xr.lo / xstep) * xstep; t <= xr.hi + 1e-9 * xstep; t += xstep) {
            out << "<line x1=\"" << num(sx(t)) << "\" y1=\"" << num(bottom) << "\" x2=\""
                << num(sx(t)) << "\" y2=\"" << num(bottom + 5) << "\" stroke=\"#333\"/>\n"
                << "<text x=\"" << num(sx(t)) << "\" y=\"" << num(bottom + 20)
                << "\" text-anchor=\"middle\">" << num(t) << "</text>\n";
        }
        const double ystep = nice_step(yr.hi - yr.lo, 5);
        for (double t = std::ceil(yr.lo / ystep) * ystep; t <= yr.hi + 1e-9 * ystep; t += ystep) {
            const double yy = bottom - (t - yr.lo) / (yr.hi - yr.lo) * (bottom - top);
            out << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(yy) << "\" x2=\""
                << num(left) << "\" y2=\"" << num(yy) << "\" stroke=\"#333\"/>\n"
                << "<text x=\"" << num(left - 8) << "\" y=\"" << num(yy + 4)
                << "\" text-anchor=\"end\">" << (panel.log_y ? "1e" + num(t) : num(t))
                << "</text>\n";
        }
        if (!panel.x_label.empty())
            out << "<text x=\"" << num((left + right) / 2) << "\" y=\"" << num(bottom + 40)
                << "\" text-anchor=\"middle\">" << xml_escape(panel.x_label) << "</text>\n";
        if (!panel.y_label.empty())
            out << "<text x=\"" << num(left - 58) << "\" y=\"" << num((top + bottom) / 2)
                << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << num(left - 58) << " "
                << num((top + bottom) / 2) << ")\">" << xml_escape(panel.y_label) << "</text>\n";

        for (const auto& m : panel.markers) {
            out << "<line x1=\"" << num(sx(m.x)) << "\" y1=\"" << num(top) << "\" x2=\""
                << num(sx(m.x)) << "\" y2=\"" << num(bottom)
                << "\" stroke=\"#999\" stroke-dasharray=\"2,3\"/>\n";
            if (!m.label.empty())
                out << "<text x=\"" << num(sx(m.x) + 3) << "\" y=\"" << num(top + 14)
                    << "\" fill=\"#666\">" << xml_escape(m.label) << "</text>\n";
        }

        double legend_y = top + 16;
        for (const auto& s : panel.series) {
            if (s.x.size() != s.y.size())
                throw std::invalid_argument("svg plot: series x/y size mismatch");
            out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
            if (s.dashed) out << " stroke-dasharray=\"6,4\"";
            out << " points=\"";
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                const double yy = sy(s.y[i]);
                if (!std::isfinite(yy)) continue;
                out << num(sx(s.x[i])) << ',' << num(std::clamp(yy, top, bottom)) << ' ';
            }
            out << "\"/>\n";
            if (!s.label.empty()) {
                out << "<line x1=\"" << num(right - 150) << "\" y1=\"" << num(legend_y)
                    << "\" x2=\"" << num(right - 120) << "\" y2=\"" << num(legend_y)
                    << "\" stroke=\"" << s.color << "\" stroke-width=\"1.5\""
                    << (s.dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>\n"
                    << "<text x=\"" << num(right - 114) << "\" y=\"" << num(legend_y + 4)
                    << "\">" << xml_escape(s.label) << "</text>\n";
                legend_y += 16;
            }
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
}

}  // namespace qrad
