#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace pwmkit {

// One polyline of a chart.
struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

namespace detail {

inline std::string format_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace detail

// Self-contained SVG line chart: axes, tick labels, legend, one polyline
// per series. Kept deliberately small; it exists so plots need no external
// tooling.
inline std::string line_chart_svg(const std::string& title,
                                  const std::string& x_label,
                                  const std::string& y_label,
                                  const std::vector<PlotSeries>& series,
                                  int width = 960, int height = 540) {
  if (series.empty()) {
    throw std::invalid_argument("line_chart_svg: no series");
  }
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min, y_min = x_min, y_max = -x_min;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size() || s.x.empty()) {
      throw std::invalid_argument("line_chart_svg: bad series data");
    }
    for (double v : s.x) { x_min = std::min(x_min, v); x_max = std::max(x_max, v); }
    for (double v : s.y) { y_min = std::min(y_min, v); y_max = std::max(y_max, v); }
  }
  if (x_max == x_min) { x_max += 1.0; x_min -= 1.0; }
  if (y_max == y_min) { y_max += 1.0; y_min -= 1.0; }
  const double y_pad = 0.05 * (y_max - y_min);
  y_min -= y_pad;
  y_max += y_pad;

  const double left = 70, right = 20, top = 40, bottom = 50;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;
  const auto map_x = [&](double v) {
    return left + plot_w * (v - x_min) / (x_max - x_min);
  };
  const auto map_y = [&](double v) {
    return top + plot_h * (1.0 - (v - y_min) / (y_max - y_min));
  };

  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                  "#d62728", "#9467bd", "#8c564b",
                                  "#e377c2", "#7f7f7f"};
  constexpr int palette_size = 8;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + detail::format_coord(left + plot_w / 2) +
         "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">" + title + "</text>\n";

  const int ticks = 5;
  for (int i = 0; i <= ticks; ++i) {
    const double fx = x_min + (x_max - x_min) * i / ticks;
    const double fy = y_min + (y_max - y_min) * i / ticks;
    const double px = map_x(fx);
    const double py = map_y(fy);
    svg += "<line x1=\"" + detail::format_coord(px) + "\" y1=\"" +
           detail::format_coord(top) + "\" x2=\"" + detail::format_coord(px) +
           "\" y2=\"" + detail::format_coord(top + plot_h) +
           "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + detail::format_coord(left) + "\" y1=\"" +
           detail::format_coord(py) + "\" x2=\"" +
           detail::format_coord(left + plot_w) + "\" y2=\"" +
           detail::format_coord(py) +
           "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + detail::format_coord(px) + "\" y=\"" +
           detail::format_coord(top + plot_h + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">" + detail::format_coord(fx) + "</text>\n";
    svg += "<text x=\"" + detail::format_coord(left - 8) + "\" y=\"" +
           detail::format_coord(py + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">" + detail::format_coord(fy) + "</text>\n";
  }
  svg += "<rect x=\"" + detail::format_coord(left) + "\" y=\"" +
         detail::format_coord(top) + "\" width=\"" +
         detail::format_coord(plot_w) + "\" height=\"" +
         detail::format_coord(plot_h) +
         "\" fill=\"none\" stroke=\"#404040\" stroke-width=\"1\"/>\n";
  svg += "<text x=\"" + detail::format_coord(left + plot_w / 2) + "\" y=\"" +
         detail::format_coord(height - 12.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">" + x_label + "</text>\n";
  svg += "<text x=\"18\" y=\"" + detail::format_coord(top + plot_h / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\" transform=\"rotate(-90 18 " +
         detail::format_coord(top + plot_h / 2) + ")\">" + y_label +
         "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* colour = palette[si % palette_size];
    std::string points;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i > 0) points += ' ';
      points += detail::format_coord(map_x(s.x[i]));
      points += ',';
      points += detail::format_coord(map_y(s.y[i]));
    }
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += colour;
    svg += "\" stroke-width=\"1.4\" points=\"" + points + "\"/>\n";

    const double lx = left + plot_w - 150;
    const double ly = top + 16 + 18 * static_cast<double>(si);
    svg += "<line x1=\"" + detail::format_coord(lx) + "\" y1=\"" +
           detail::format_coord(ly - 4) + "\" x2=\"" +
           detail::format_coord(lx + 24) + "\" y2=\"" +
           detail::format_coord(ly - 4) + "\" stroke=\"";
    svg += colour;
    svg += "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + detail::format_coord(lx + 30) + "\" y=\"" +
           detail::format_coord(ly) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + s.label +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace pwmkit
