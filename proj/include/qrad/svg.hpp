#pragma once

#include <filesystem>
#include <string>
#include <vector>

// Minimal self-contained SVG line plots for verification artifacts. No
// external plotting dependency; axes, ticks, legends and (optionally)
// vertical marker lines are drawn directly.

namespace qrad {

struct PlotSeries {
    std::vector<double> x, y;
    std::string label;
    std::string color = "#1f77b4";
    bool dashed = false;
};

struct PlotMarker {
    double x = 0.0;
    std::string label;
};

struct PlotPanel {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
    std::vector<PlotMarker> markers;  // vertical reference lines
    bool log_y = false;
};

void write_svg_plot(const std::filesystem::path& path, const std::vector<PlotPanel>& panels,
                    int width = 860, int panel_height = 340);

}  // namespace qrad
