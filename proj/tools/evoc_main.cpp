// Command-line front end: run, sweep, fitness-table and plot.

#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "evoc/config.hpp"
#include "evoc/csv.hpp"
#include "evoc/engine.hpp"
#include "evoc/experiments.hpp"
#include "evoc/fitness.hpp"
#include "evoc/plot.hpp"

namespace {

using namespace evoc;

struct Overrides {
  std::string config_path;
  std::map<std::string, std::string> flags;

  void attach(CLI::App& app, const std::vector<std::string>& keys) {
    app.add_option("--config", config_path, "key=value config file");
    for (const auto& key : keys) {
      app.add_option("--" + key, flags[key], "override " + key);
    }
  }

  /// File values first, then every flag the user actually passed.
  KeyValues resolve(const CLI::App& app) const {
    KeyValues values;
    if (!config_path.empty()) values = read_key_values(config_path);
    for (const auto& [key, value] : flags) {
      if (app.count("--" + key) > 0) values[key] = value;
    }
    return values;
  }
};

void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::fwrite(contents.data(), 1, contents.size(), stdout);
  } else {
    write_file(path, contents);
  }
}

std::vector<std::string> header_lines(std::string_view command,
                                      const ConfigLines& entries) {
  std::vector<std::string> out;
  out.push_back("evoc " + std::string(kVersion));
  out.push_back("command=" + std::string(command));
  for (const auto& [k, v] : entries) out.push_back(k + "=" + v);
  return out;
}

PlotMetric parse_metric(const std::string& name) {
  if (name == "fitness") return PlotMetric::Fitness;
  if (name == "diversity") return PlotMetric::Diversity;
  throw ConfigError("metric", "expected fitness|diversity, got '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Agent-based cultural evolution: creators, imitators and "
               "knowledge-based invention"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  auto* run_cmd = app.add_subcommand("run", "Simulate one run, write its time series");
  Overrides run_overrides;
  run_overrides.attach(*run_cmd, run_config_keys());
  std::string run_out;
  std::string run_plot;
  std::string run_metric = "fitness";
  run_cmd->add_option("--out", run_out, "time-series CSV (default stdout)");
  run_cmd->add_option("--plot", run_plot, "also write an SVG chart");
  run_cmd->add_option("--metric", run_metric, "chart metric: fitness|diversity");

  auto* sweep_cmd = app.add_subcommand("sweep", "Creator-fraction x invent-rate sweep");
  Overrides sweep_overrides;
  sweep_overrides.attach(*sweep_cmd, sweep_spec_keys());
  std::string sweep_out;
  std::string sweep_plot;
  std::string sweep_metric = "fitness";
  int threads = 1;
  sweep_cmd->add_option("--out", sweep_out, "sweep CSV (default stdout)");
  sweep_cmd->add_option("--plot", sweep_plot, "also write an SVG chart");
  sweep_cmd->add_option("--metric", sweep_metric, "chart metric: fitness|diversity");
  sweep_cmd->add_option("--threads", threads, "worker threads")
      ->check(CLI::PositiveNumber);

  auto* table_cmd = app.add_subcommand("fitness-table", "Dump F1 over all 729 actions");
  Overrides table_overrides;
  table_overrides.attach(*table_cmd, {"w_move", "w_sym"});
  std::string table_out;
  table_cmd->add_option("--out", table_out, "CSV path (default stdout)");

  auto* plot_cmd = app.add_subcommand("plot", "Chart a sweep or time-series CSV as SVG");
  std::string plot_in;
  std::string plot_out;
  std::string plot_metric = "fitness";
  plot_cmd->add_option("--in", plot_in, "sweep or series CSV")->required();
  plot_cmd->add_option("--out", plot_out, "SVG path (default stdout)");
  plot_cmd->add_option("--metric", plot_metric, "fitness|diversity");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      const RunConfig config = resolve_run_config(run_overrides.resolve(*run_cmd));
      const PlotMetric metric = parse_metric(run_metric);
      const auto series = run(config);
      const auto entries = describe(config);
      emit(run_out, comment_header("run", entries) + series_csv(series));
      if (!run_plot.empty()) {
        Chart chart = series_chart(series, metric);
        chart.header = header_lines("run", entries);
        write_file(run_plot, render_svg(chart));
      }
    } else if (sweep_cmd->parsed()) {
      const SweepSpec spec =
          resolve_sweep_spec(sweep_overrides.resolve(*sweep_cmd));
      const PlotMetric metric = parse_metric(sweep_metric);
      spec.validate();
      const auto table = sweep(spec, threads);
      const auto entries = describe(spec);
      emit(sweep_out, comment_header("sweep", entries) + sweep_csv(table));
      if (!sweep_plot.empty()) {
        Chart chart = sweep_chart(table, metric);
        chart.header = header_lines("sweep", entries);
        write_file(sweep_plot, render_svg(chart));
      }
    } else if (table_cmd->parsed()) {
      const RunConfig config =
          resolve_run_config(table_overrides.resolve(*table_cmd));
      const FitnessTable table(config.weights);
      emit(table_out, comment_header("fitness-table", describe(table.weights())) +
                          fitness_table_csv(table));
    } else if (plot_cmd->parsed()) {
      const PlotMetric metric = parse_metric(plot_metric);
      const std::string text = read_file(plot_in);
      const auto columns = column_line(text);
      Chart chart;
      std::vector<std::string> source;
      if (columns == kSweepColumns) {
        const auto parsed = parse_sweep_csv(text);
        chart = sweep_chart(parsed.rows, metric);
        source = parsed.comments;
      } else if (columns == kSeriesColumns) {
        const auto parsed = parse_series_csv(text);
        chart = series_chart(parsed.rows, metric);
        source = parsed.comments;
      } else {
        throw std::runtime_error("'" + plot_in +
                                 "' is neither a sweep nor a series CSV");
      }
      chart.header = header_lines("plot", {{"metric", plot_metric}});
      for (const auto& line : source) chart.header.push_back("source: " + line);
      emit(plot_out, render_svg(chart));
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "evoc: error: %s\n", e.what());
    return 1;
  }
  return 0;
}
