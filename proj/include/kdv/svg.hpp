#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kdv/errors.hpp"

namespace kdv {

/// One named curve for plotting, points are (t, ln E).
struct PlotSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

/// Renders a standalone SVG line chart: one polyline per series, a legend
/// entry per series, linear axes with 5% margins. Points with non-finite
/// coordinates are dropped (a warning goes to stderr). Throws EmptySeries
/// when the set is empty, a series is empty, or nothing finite remains.
void emit_svg_plot(const std::vector<PlotSeries>& series, const std::string& path);

/// The chart as a string, same rules as emit_svg_plot.
std::string render_svg_plot(const std::vector<PlotSeries>& series);

} // namespace kdv
