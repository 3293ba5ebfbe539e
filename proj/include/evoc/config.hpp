#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evoc/engine.hpp"
#include "evoc/experiments.hpp"

namespace evoc {

inline constexpr std::string_view kVersion = "0.1.0";

/// Rejection of a configuration value; key() names the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Ordered key=value entries. Later assignments replace earlier ones.
using KeyValues = std::map<std::string, std::string, std::less<>>;

/// Parse a flat `key=value` document: one pair per line, `#` starts a
/// comment, blank lines are ignored, whitespace around keys and values is
/// trimmed.
KeyValues parse_key_values(std::string_view text);
KeyValues read_key_values(const std::string& path);

/// Keys accepted by resolve_run_config / resolve_sweep_spec, in the order
/// describe() emits them.
const std::vector<std::string>& run_config_keys();
const std::vector<std::string>& sweep_spec_keys();

/// Defaults overridden by `values`. Unknown keys, malformed values and
/// out-of-range values throw ConfigError naming the key.
RunConfig resolve_run_config(const KeyValues& values);
SweepSpec resolve_sweep_spec(const KeyValues& values);

/// Every field as key=value text that resolves back to the same config.
std::vector<std::pair<std::string, std::string>> describe(const RunConfig& c);
std::vector<std::pair<std::string, std::string>> describe(const SweepSpec& s);
std::vector<std::pair<std::string, std::string>> describe(
    const FitnessWeights& w);

/// Shortest text that parses back to exactly `value`.
std::string format_real(double value);

}  // namespace evoc
