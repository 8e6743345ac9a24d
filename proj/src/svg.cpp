#include "kdv/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace kdv {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 500;
constexpr double kLeft = 70, kRight = 780, kTop = 30, kBottom = 450;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

std::string render_svg_plot(const std::vector<PlotSeries>& series) {
    if (series.empty()) {
        throw EmptySeries("no series to plot");
    }

    std::vector<PlotSeries> finite(series.size());
    std::size_t dropped = 0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series[i].points.empty()) {
            throw EmptySeries("series '" + series[i].name + "' has no points");
        }
        finite[i].name = series[i].name;
        for (const auto& [x, y] : series[i].points) {
            if (std::isfinite(x) && std::isfinite(y)) {
                finite[i].points.emplace_back(x, y);
            } else {
                ++dropped;
            }
        }
    }
    if (dropped > 0) {
        std::cerr << "warning: dropped " << dropped
                  << " non-finite point(s) from the plot\n";
    }

    double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
    bool any = false;
    for (const PlotSeries& s : finite) {
        for (const auto& [x, y] : s.points) {
            if (!any) {
                x_min = x_max = x;
                y_min = y_max = y;
                any = true;
            } else {
                x_min = std::min(x_min, x);
                x_max = std::max(x_max, x);
                y_min = std::min(y_min, y);
                y_max = std::max(y_max, y);
            }
        }
    }
    if (!any) {
        throw EmptySeries("no finite points remain after dropping");
    }

    // 5% margins; degenerate ranges get a unit pad so the mapping stays finite.
    double x_pad = 0.05 * (x_max - x_min);
    double y_pad = 0.05 * (y_max - y_min);
    if (x_pad == 0) x_pad = 0.5;
    if (y_pad == 0) y_pad = 0.5;
    x_min -= x_pad;
    x_max += x_pad;
    y_min -= y_pad;
    y_max += y_pad;

    auto map_x = [&](double x) {
        return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft);
    };
    auto map_y = [&](double y) {
        return kBottom - (y - y_min) / (y_max - y_min) * (kBottom - kTop);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
    svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
        << kRight - kLeft << "\" height=\"" << kBottom - kTop
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    const int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double fx = x_min + (x_max - x_min) * i / ticks;
        const double px = map_x(fx);
        svg << "<line x1=\"" << num(px) << "\" y1=\"" << kBottom << "\" x2=\""
            << num(px) << "\" y2=\"" << kBottom + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << num(px) << "\" y=\"" << kBottom + 20
            << "\" font-size=\"12\" text-anchor=\"middle\">" << num(fx)
            << "</text>\n";

        const double fy = y_min + (y_max - y_min) * i / ticks;
        const double py = map_y(fy);
        svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << num(py) << "\" x2=\""
            << kLeft << "\" y2=\"" << num(py) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(py + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">" << num(fy)
            << "</text>\n";
    }
    svg << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kHeight - 10
        << "\" font-size=\"14\" text-anchor=\"middle\">t</text>\n";
    svg << "<text x=\"18\" y=\"" << (kTop + kBottom) / 2
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << (kTop + kBottom) / 2 << ")\">ln E(t)</text>\n";

    const std::size_t n_colors = sizeof(kPalette) / sizeof(kPalette[0]);
    for (std::size_t i = 0; i < finite.size(); ++i) {
        if (finite[i].points.empty()) {
            std::cerr << "warning: series '" << finite[i].name
                      << "' has no finite points, polyline skipped\n";
            continue;
        }
        svg << "<polyline fill=\"none\" stroke=\"" << kPalette[i % n_colors]
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : finite[i].points) {
            svg << num(map_x(x)) << ',' << num(map_y(y)) << ' ';
        }
        svg << "\"/>\n";
    }

    // Legend, top right inside the frame.
    const double lx = kRight - 170, ly0 = kTop + 15;
    for (std::size_t i = 0; i < finite.size(); ++i) {
        const double ly = ly0 + 18.0 * static_cast<double>(i);
        svg << "<line class=\"legend\" x1=\"" << lx << "\" y1=\"" << num(ly - 4)
            << "\" x2=\"" << lx + 24 << "\" y2=\"" << num(ly - 4) << "\" stroke=\""
            << kPalette[i % n_colors] << "\" stroke-width=\"2\"/>\n";
        svg << "<text class=\"legend\" x=\"" << lx + 30 << "\" y=\"" << num(ly)
            << "\" font-size=\"12\">" << finite[i].name << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

void emit_svg_plot(const std::vector<PlotSeries>& series, const std::string& path) {
    const std::string body = render_svg_plot(series);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << body;
    out.flush();
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

} // namespace kdv
