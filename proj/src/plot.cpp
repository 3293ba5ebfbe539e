#include "evoc/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "evoc/config.hpp"

namespace evoc {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string comment_safe(std::string text) {
  for (std::size_t i; (i = text.find("--")) != std::string::npos;) {
    text.replace(i, 2, "- -");
  }
  return text;
}

// Step from {1, 2, 5} x 10^k giving at most ~8 intervals over [0, span].
double nice_step(double span) {
  if (span <= 0.0) return 1.0;
  const double raw = span / 8.0;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * magnitude >= raw) return m * magnitude;
  }
  return 10.0 * magnitude;
}

struct Axis {
  double lo;
  double hi;
  double step;
};

Axis make_axis(double lo, double hi) {
  lo = std::min(lo, 0.0);
  if (hi <= lo) hi = lo + 1.0;
  const double step = nice_step(hi - lo);
  return {std::floor(lo / step) * step, std::ceil(hi / step) * step, step};
}

const char* metric_label(PlotMetric metric) {
  return metric == PlotMetric::Fitness ? "Mean fitness of actions"
                                       : "Number of distinct actions";
}

}  // namespace

std::string render_svg(const Chart& chart) {
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
  bool any = false;
  for (const auto& line : chart.lines) {
    for (const auto& [x, y] : line.points) {
      if (!any) {
        x_min = x_max = x;
        y_min = y_max = y;
        any = true;
      }
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (!any) throw std::invalid_argument("nothing to plot");

  const Axis xa = make_axis(x_min, x_max);
  const Axis ya = make_axis(y_min, y_max);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xa.lo) / (xa.hi - xa.lo) * plot_w; };
  auto py = [&](double y) {
    return kTop + plot_h - (y - ya.lo) / (ya.hi - ya.lo) * plot_h;
  };

  std::string svg = "<!--\n";
  for (const auto& line : chart.header) svg += comment_safe(line) + "\n";
  svg += "-->\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
         " " + num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" "
         "font-size=\"14\">" + escape(chart.title) + "</text>\n";

  // Axes and ticks.
  svg += "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop + plot_h) +
         "\" x2=\"" + num(kLeft + plot_w) + "\" y2=\"" + num(kTop + plot_h) +
         "\"/>\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
         num(kLeft) + "\" y2=\"" + num(kTop + plot_h) + "\"/>\n";
  svg += "</g>\n<g>\n";
  const int x_ticks = static_cast<int>(std::lround((xa.hi - xa.lo) / xa.step));
  for (int i = 0; i <= x_ticks; ++i) {
    const double v = xa.lo + i * xa.step;
    const double x = px(v);
    svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kTop + plot_h) +
           "\" x2=\"" + num(x) + "\" y2=\"" + num(kTop + plot_h + 5) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(kTop + plot_h + 18) +
           "\" text-anchor=\"middle\">" + tick_label(v) + "</text>\n";
  }
  const int y_ticks = static_cast<int>(std::lround((ya.hi - ya.lo) / ya.step));
  for (int i = 0; i <= y_ticks; ++i) {
    const double v = ya.lo + i * ya.step;
    const double y = py(v);
    svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(y) + "\" x2=\"" +
           num(kLeft) + "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(y + 4) +
           "\" text-anchor=\"end\">" + tick_label(v) + "</text>\n";
  }
  svg += "</g>\n";
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" +
         num(kHeight - 16) + "\" text-anchor=\"middle\">" +
         escape(chart.x_label) + "</text>\n";
  svg += "<text x=\"18\" y=\"" + num(kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         num(kTop + plot_h / 2) + ")\">" + escape(chart.y_label) +
         "</text>\n";

  for (std::size_t i = 0; i < chart.lines.size(); ++i) {
    const auto& line = chart.lines[i];
    const char* color = kPalette[i % kPalette.size()];
    std::string points;
    for (const auto& [x, y] : line.points) {
      if (!points.empty()) points += ' ';
      points += num(px(x)) + "," + num(py(y));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
    const double ly = kTop + 10 + 20.0 * static_cast<double>(i);
    const double lx = kLeft + plot_w + 15;
    svg += "<rect x=\"" + num(lx) + "\" y=\"" + num(ly - 5) +
           "\" width=\"20\" height=\"3\" fill=\"" + color + "\"/>\n";
    svg += "<text x=\"" + num(lx + 26) + "\" y=\"" + num(ly) + "\">" +
           escape(line.label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

Chart sweep_chart(std::span<const SweepCell> table, PlotMetric metric) {
  if (table.empty()) throw std::invalid_argument("empty sweep table");
  std::map<double, PlotLine> by_rate;
  for (const auto& cell : table) {
    auto& line = by_rate[cell.invent_rate];
    line.label = "invent " + tick_label(cell.invent_rate * 100.0) + "%";
    line.points.emplace_back(cell.creator_fraction * 100.0,
                             metric == PlotMetric::Fitness
                                 ? cell.mean_fitness_avg
                                 : cell.diversity_avg);
  }
  Chart chart;
  chart.title = metric == PlotMetric::Fitness
                    ? "Mean fitness vs. percentage of creators"
                    : "Diversity vs. percentage of creators";
  chart.x_label = "Creators (% of population)";
  chart.y_label = metric_label(metric);
  for (auto& [rate, line] : by_rate) {
    std::sort(line.points.begin(), line.points.end());
    chart.lines.push_back(std::move(line));
  }
  return chart;
}

Chart series_chart(std::span<const MetricsRecord> series, PlotMetric metric) {
  if (series.empty()) throw std::invalid_argument("empty time series");
  PlotLine line;
  line.label = metric == PlotMetric::Fitness ? "mean fitness" : "diversity";
  for (const auto& r : series) {
    line.points.emplace_back(r.iteration, metric == PlotMetric::Fitness
                                              ? r.mean_fitness
                                              : static_cast<double>(r.diversity));
  }
  Chart chart;
  chart.title = metric == PlotMetric::Fitness ? "Mean fitness over time"
                                              : "Diversity over time";
  chart.x_label = "Iteration";
  chart.y_label = metric_label(metric);
  chart.lines.push_back(std::move(line));
  return chart;
}

}  // namespace evoc
