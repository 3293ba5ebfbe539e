#include "evoc/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "evoc/config.hpp"

namespace evoc {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text = text.substr(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line = line.substr(comma + 1);
  }
  return fields;
}

template <typename T>
T field(std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::runtime_error("malformed CSV field '" + std::string(text) + "'");
  }
  return value;
}

template <typename Row, typename MakeRow>
ParsedCsv<Row> parse(std::string_view text, std::string_view columns,
                     std::size_t width, MakeRow make_row) {
  ParsedCsv<Row> out;
  bool seen_columns = false;
  for (const auto line : split_lines(text)) {
    if (!seen_columns) {
      if (line.starts_with('#')) {
        auto body = line.substr(1);
        if (body.starts_with(' ')) body.remove_prefix(1);
        out.comments.emplace_back(body);
        continue;
      }
      if (line != columns) {
        throw std::runtime_error("unexpected CSV columns: '" +
                                 std::string(line) + "'");
      }
      seen_columns = true;
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != width) {
      throw std::runtime_error("CSV row has " + std::to_string(fields.size()) +
                               " fields, expected " + std::to_string(width));
    }
    out.rows.push_back(make_row(fields));
  }
  if (!seen_columns) throw std::runtime_error("CSV has no column line");
  return out;
}

}  // namespace

std::string comment_header(std::string_view command,
                           const ConfigLines& entries) {
  std::string out = "# evoc " + std::string(kVersion) + "\n";
  out += "# command=" + std::string(command) + "\n";
  for (const auto& [key, value] : entries) {
    out += "# " + key + "=" + value + "\n";
  }
  return out;
}

std::string series_csv(std::span<const MetricsRecord> series) {
  std::string out(kSeriesColumns);
  out += '\n';
  for (const auto& r : series) {
    out += std::to_string(r.iteration) + ',' + format_real(r.mean_fitness) +
           ',' + format_real(r.max_fitness) + ',' +
           std::to_string(r.diversity) + ',' +
           std::to_string(r.invention_adoptions) + ',' +
           std::to_string(r.imitation_adoptions) + '\n';
  }
  return out;
}

std::string sweep_csv(std::span<const SweepCell> table) {
  std::string out(kSweepColumns);
  out += '\n';
  for (const auto& c : table) {
    out += format_real(c.invent_rate) + ',' + format_real(c.creator_fraction) +
           ',' + std::to_string(c.n_runs) + ',' +
           format_real(c.mean_fitness_avg) + ',' +
           format_real(c.mean_fitness_stderr) + ',' +
           format_real(c.diversity_avg) + ',' +
           format_real(c.diversity_stderr) + '\n';
  }
  return out;
}

std::string fitness_table_csv(const FitnessTable& table) {
  std::string out(kFitnessTableColumns);
  out += '\n';
  for (const auto& row : table.rows()) {
    out += std::to_string(row.encoding) + ',' +
           std::to_string(row.signals.movement) + ',' +
           std::to_string(row.signals.symmetry) + ',' +
           format_real(row.fitness) + '\n';
  }
  return out;
}

ParsedCsv<SweepCell> parse_sweep_csv(std::string_view text) {
  return parse<SweepCell>(text, kSweepColumns, 7, [](const auto& f) {
    SweepCell c;
    c.invent_rate = field<double>(f[0]);
    c.creator_fraction = field<double>(f[1]);
    c.n_runs = field<int>(f[2]);
    c.mean_fitness_avg = field<double>(f[3]);
    c.mean_fitness_stderr = field<double>(f[4]);
    c.diversity_avg = field<double>(f[5]);
    c.diversity_stderr = field<double>(f[6]);
    return c;
  });
}

ParsedCsv<MetricsRecord> parse_series_csv(std::string_view text) {
  return parse<MetricsRecord>(text, kSeriesColumns, 6, [](const auto& f) {
    MetricsRecord r;
    r.iteration = field<int>(f[0]);
    r.mean_fitness = field<double>(f[1]);
    r.max_fitness = field<double>(f[2]);
    r.diversity = field<int>(f[3]);
    r.invention_adoptions = field<int>(f[4]);
    r.imitation_adoptions = field<int>(f[5]);
    return r;
  });
}

std::string_view column_line(std::string_view text) {
  for (const auto line : split_lines(text)) {
    if (!line.starts_with('#')) return line;
  }
  return {};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace evoc
