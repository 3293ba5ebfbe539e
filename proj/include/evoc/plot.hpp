#pragma once

#include <span>
#include <string>
#include <vector>

#include "evoc/engine.hpp"
#include "evoc/experiments.hpp"

namespace evoc {

enum class PlotMetric { Fitness, Diversity };

struct PlotLine {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct Chart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotLine> lines;
  /// Written into a leading XML comment, one per line.
  std::vector<std::string> header;
};

/// Line chart as a standalone SVG document. Output depends only on `chart`.
/// Throws std::invalid_argument if there are no lines or no points.
std::string render_svg(const Chart& chart);

/// One line per invent_rate, x = creator percentage, y = averaged metric.
Chart sweep_chart(std::span<const SweepCell> table, PlotMetric metric);

/// One line over iterations 0..T.
Chart series_chart(std::span<const MetricsRecord> series, PlotMetric metric);

}  // namespace evoc
