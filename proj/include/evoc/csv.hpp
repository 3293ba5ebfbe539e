#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evoc/engine.hpp"
#include "evoc/experiments.hpp"
#include "evoc/fitness.hpp"

namespace evoc {

using ConfigLines = std::vector<std::pair<std::string, std::string>>;

/// `# evoc <version>` followed by `# command=<command>` and one
/// `# key=value` line per entry.
std::string comment_header(std::string_view command, const ConfigLines& entries);

inline constexpr std::string_view kSeriesColumns =
    "iteration,mean_fitness,max_fitness,diversity,invention_adoptions,"
    "imitation_adoptions";
inline constexpr std::string_view kSweepColumns =
    "invent_rate,creator_fraction,n_runs,mean_fitness_avg,"
    "mean_fitness_stderr,diversity_avg,diversity_stderr";
inline constexpr std::string_view kFitnessTableColumns =
    "encoding,movement,symmetry,fitness";

/// Column line plus one row per record; no comment header.
std::string series_csv(std::span<const MetricsRecord> series);
std::string sweep_csv(std::span<const SweepCell> table);
std::string fitness_table_csv(const FitnessTable& table);

/// A CSV file split into its leading `#` comment lines (without the marker)
/// and the rows that follow the column line.
template <typename Row>
struct ParsedCsv {
  std::vector<std::string> comments;
  std::vector<Row> rows;
};

/// Throw std::runtime_error on a wrong column line or malformed row.
ParsedCsv<SweepCell> parse_sweep_csv(std::string_view text);
ParsedCsv<MetricsRecord> parse_series_csv(std::string_view text);

/// The column line of a CSV document, skipping comment lines.
std::string_view column_line(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace evoc
