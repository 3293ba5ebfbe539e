#include "evoc/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

namespace evoc {

namespace {

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_real(const std::string& key, std::string_view text) {
  // Accepts plain decimals and simple ratios such as 1/6.
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const double num = parse_real(key, trim(text.substr(0, slash)));
    const double den = parse_real(key, trim(text.substr(slash + 1)));
    if (den == 0.0) throw ConfigError(key, "division by zero");
    return num / den;
  }
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError(key, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

template <typename Int>
Int parse_int(const std::string& key, std::string_view text) {
  Int value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError(key, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_real_list(const std::string& key,
                                    std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_real(key, trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  if (out.empty()) throw ConfigError(key, "empty list");
  return out;
}

void require_unit(const std::string& key, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ConfigError(key, "must lie in [0, 1], got " + format_real(v));
  }
}

void require_positive(const std::string& key, long long v) {
  if (v <= 0) throw ConfigError(key, "must be positive");
}

template <typename Enum>
Enum parse_enum(const std::string& key, std::string_view text,
                std::initializer_list<std::pair<std::string_view, Enum>> names) {
  for (const auto& [name, value] : names) {
    if (text == name) return value;
  }
  std::string allowed;
  for (const auto& [name, value] : names) {
    allowed += allowed.empty() ? "" : "|";
    allowed += name;
  }
  throw ConfigError(key, "expected one of " + allowed + ", got '" +
                             std::string(text) + "'");
}

const char* name_of(Topology t) {
  return t == Topology::Toroidal ? "toroidal" : "bounded";
}
const char* name_of(Neighborhood n) {
  return n == Neighborhood::Moore ? "moore" : "von_neumann";
}
const char* name_of(UpdateOrder o) {
  return o == UpdateOrder::Shuffled ? "shuffled" : "fixed_scan";
}
const char* name_of(Visibility v) {
  return v == Visibility::Snapshot ? "snapshot" : "immediate";
}

using Setter = std::function<void(RunConfig&, const std::string&,
                                  std::string_view)>;

// Fields of RunConfig that a sweep template also carries.
const std::vector<std::pair<std::string, Setter>>& template_setters() {
  static const std::vector<std::pair<std::string, Setter>> setters = {
      {"width",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         c.world.width = parse_int<int>(k, v);
         require_positive(k, c.world.width);
       }},
      {"height",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         c.world.height = parse_int<int>(k, v);
         require_positive(k, c.world.height);
       }},
      {"topology",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         c.world.topology = parse_enum<Topology>(
             k, v, {{"toroidal", Topology::Toroidal},
                    {"bounded", Topology::Bounded}});
       }},
      {"neighborhood",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         c.world.neighborhood = parse_enum<Neighborhood>(
             k, v, {{"moore", Neighborhood::Moore},
                    {"von_neumann", Neighborhood::VonNeumann}});
       }},
      {"change_prob",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         c.change_prob = parse_real(k, v);
         require_unit(k, c.change_prob);
       }},
      {"w_move",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         c.weights.move = parse_real(k, v);
         if (!(c.weights.move >= 0.0)) throw ConfigError(k, "must be >= 0");
       }},
      {"w_sym",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         c.weights.symmetry = parse_real(k, v);
         if (!(c.weights.symmetry >= 0.0)) throw ConfigError(k, "must be >= 0");
       }},
      {"update_order",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         c.update_order = parse_enum<UpdateOrder>(
             k, v, {{"shuffled", UpdateOrder::Shuffled},
                    {"fixed_scan", UpdateOrder::FixedScan}});
       }},
      {"visibility",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         c.visibility = parse_enum<Visibility>(
             k, v, {{"snapshot", Visibility::Snapshot},
                    {"immediate", Visibility::Immediate}});
       }},
  };
  return setters;
}

const std::vector<std::pair<std::string, Setter>>& run_only_setters() {
  static const std::vector<std::pair<std::string, Setter>> setters = {
      {"creator_fraction",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         c.world.creator_fraction = parse_real(k, v);
         require_unit(k, c.world.creator_fraction);
       }},
      {"creator_invent_rate",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         c.world.creator_invent_rate = parse_real(k, v);
         require_unit(k, c.world.creator_invent_rate);
       }},
      {"iterations",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         c.iterations = parse_int<int>(k, v);
         if (c.iterations < 0) throw ConfigError(k, "must be >= 0");
       }},
      {"seed",
       [](RunConfig& c, const std::string& k, std::string_view v) {
         c.seed = parse_int<std::uint64_t>(k, v);
       }},
  };
  return setters;
}

const Setter* find_setter(
    const std::vector<std::pair<std::string, Setter>>& setters,
    std::string_view key) {
  for (const auto& [name, setter] : setters) {
    if (name == key) return &setter;
  }
  return nullptr;
}

void append_template(std::vector<std::pair<std::string, std::string>>& out,
                     const RunConfig& c) {
  out.emplace_back("width", std::to_string(c.world.width));
  out.emplace_back("height", std::to_string(c.world.height));
  out.emplace_back("topology", name_of(c.world.topology));
  out.emplace_back("neighborhood", name_of(c.world.neighborhood));
  out.emplace_back("change_prob", format_real(c.change_prob));
  out.emplace_back("w_move", format_real(c.weights.move));
  out.emplace_back("w_sym", format_real(c.weights.symmetry));
  out.emplace_back("update_order", name_of(c.update_order));
  out.emplace_back("visibility", name_of(c.visibility));
}

std::string join_reals(const std::vector<double>& values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += ',';
    out += format_real(v);
  }
  return out;
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

KeyValues parse_key_values(std::string_view text) {
  KeyValues out;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no),
                        "expected key=value, got '" + std::string(line) + "'");
    }
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no), "empty key");
    }
    out[std::string(key)] = std::string(trim(line.substr(eq + 1)));
  }
  return out;
}

KeyValues read_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_key_values(buffer.str());
}

const std::vector<std::string>& run_config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, _] : template_setters()) k.push_back(name);
    for (const auto& [name, _] : run_only_setters()) k.push_back(name);
    return k;
  }();
  return keys;
}

const std::vector<std::string>& sweep_spec_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, _] : template_setters()) k.push_back(name);
    for (const char* name : {"creator_fractions", "invent_rates",
                             "runs_per_cell", "measure_at_iteration",
                             "master_seed"}) {
      k.emplace_back(name);
    }
    return k;
  }();
  return keys;
}

RunConfig resolve_run_config(const KeyValues& values) {
  RunConfig config;
  for (const auto& [key, value] : values) {
    const Setter* setter = find_setter(template_setters(), key);
    if (!setter) setter = find_setter(run_only_setters(), key);
    if (!setter) throw ConfigError(key, "unknown key");
    (*setter)(config, key, value);
  }
  return config;
}

SweepSpec resolve_sweep_spec(const KeyValues& values) {
  SweepSpec spec;
  for (const auto& [key, value] : values) {
    if (const Setter* setter = find_setter(template_setters(), key)) {
      (*setter)(spec.base, key, value);
    } else if (key == "creator_fractions") {
      spec.creator_fractions = parse_real_list(key, value);
      for (double f : spec.creator_fractions) require_unit(key, f);
    } else if (key == "invent_rates") {
      spec.invent_rates = parse_real_list(key, value);
      for (double p : spec.invent_rates) {
        if (!(p > 0.0 && p <= 1.0)) throw ConfigError(key, "must lie in (0, 1]");
      }
    } else if (key == "runs_per_cell") {
      spec.runs_per_cell = parse_int<int>(key, value);
      require_positive(key, spec.runs_per_cell);
    } else if (key == "measure_at_iteration") {
      spec.measure_at_iteration = parse_int<int>(key, value);
      require_positive(key, spec.measure_at_iteration);
    } else if (key == "master_seed") {
      spec.master_seed = parse_int<std::uint64_t>(key, value);
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  return spec;
}

std::vector<std::pair<std::string, std::string>> describe(const RunConfig& c) {
  std::vector<std::pair<std::string, std::string>> out;
  append_template(out, c);
  out.emplace_back("creator_fraction", format_real(c.world.creator_fraction));
  out.emplace_back("creator_invent_rate",
                   format_real(c.world.creator_invent_rate));
  out.emplace_back("iterations", std::to_string(c.iterations));
  out.emplace_back("seed", std::to_string(c.seed));
  return out;
}

std::vector<std::pair<std::string, std::string>> describe(const SweepSpec& s) {
  std::vector<std::pair<std::string, std::string>> out;
  append_template(out, s.base);
  out.emplace_back("creator_fractions", join_reals(s.creator_fractions));
  out.emplace_back("invent_rates", join_reals(s.invent_rates));
  out.emplace_back("runs_per_cell", std::to_string(s.runs_per_cell));
  out.emplace_back("measure_at_iteration",
                   std::to_string(s.measure_at_iteration));
  out.emplace_back("master_seed", std::to_string(s.master_seed));
  return out;
}

std::vector<std::pair<std::string, std::string>> describe(
    const FitnessWeights& w) {
  return {{"w_move", format_real(w.move)}, {"w_sym", format_real(w.symmetry)}};
}

}  // namespace evoc
