#include "evoc/config.hpp"

#include <gtest/gtest.h>

namespace evoc {
namespace {

TEST(Config, EmptyDocumentGivesDefaults) {
  const RunConfig c = resolve_run_config(parse_key_values(""));
  EXPECT_EQ(c, RunConfig{});
  EXPECT_EQ(c.world.width, 10);
  EXPECT_EQ(c.world.height, 10);
  EXPECT_EQ(c.world.topology, Topology::Toroidal);
  EXPECT_DOUBLE_EQ(c.change_prob, 1.0 / 6.0);
  EXPECT_EQ(c.weights.move, 1.0);
  EXPECT_EQ(c.weights.symmetry, 5.0);
  EXPECT_EQ(c.iterations, 15);
}

TEST(Config, ParsesCommentsAndWhitespace) {
  const auto kv = parse_key_values(
      "# header\n\n  width = 12  # trailing\nchange_prob=1/6\r\ntopology=bounded\n");
  EXPECT_EQ(kv.size(), 3u);
  const RunConfig c = resolve_run_config(kv);
  EXPECT_EQ(c.world.width, 12);
  EXPECT_EQ(c.world.topology, Topology::Bounded);
  EXPECT_DOUBLE_EQ(c.change_prob, 1.0 / 6.0);
}

std::string rejected_key(const std::string& text) {
  try {
    resolve_run_config(parse_key_values(text));
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "";
}

TEST(Config, RejectionsNameTheKey) {
  EXPECT_EQ(rejected_key("creator_fraction=1.5"), "creator_fraction");
  EXPECT_EQ(rejected_key("colour=blue"), "colour");
  EXPECT_EQ(rejected_key("width=ten"), "width");
  EXPECT_EQ(rejected_key("width=0"), "width");
  EXPECT_EQ(rejected_key("neighborhood=hex"), "neighborhood");
  EXPECT_EQ(rejected_key("change_prob=1/0"), "change_prob");
  EXPECT_EQ(rejected_key("w_sym=-2"), "w_sym");
  EXPECT_EQ(rejected_key("iterations=-1"), "iterations");
  EXPECT_EQ(rejected_key("just text"), "line 1");
}

TEST(Config, LaterValuesOverride) {
  KeyValues kv = parse_key_values("seed=7\n");
  kv["seed"] = "42";  // what a --seed flag does
  EXPECT_EQ(resolve_run_config(kv).seed, 42u);
}

TEST(Config, DescribeRoundTrips) {
  RunConfig c;
  c.world.width = 7;
  c.world.neighborhood = Neighborhood::Moore;
  c.world.creator_fraction = 0.3;
  c.visibility = Visibility::Immediate;
  c.update_order = UpdateOrder::FixedScan;
  c.change_prob = 0.1 + 0.2;
  c.seed = 18446744073709551615ULL;
  KeyValues kv;
  for (const auto& [k, v] : describe(c)) kv[k] = v;
  EXPECT_EQ(resolve_run_config(kv), c);
  EXPECT_EQ(describe(c).size(), run_config_keys().size());
}

TEST(Config, SweepSpecDefaultsAndRoundTrip) {
  const SweepSpec d = resolve_sweep_spec({});
  EXPECT_EQ(d.creator_fractions.size(), 11u);
  EXPECT_EQ(d.invent_rates, (std::vector<double>{0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(d.runs_per_cell, 100);
  EXPECT_EQ(d.measure_at_iteration, 15);

  const SweepSpec s = resolve_sweep_spec(parse_key_values(
      "creator_fractions=0, 0.5,1\ninvent_rates=1\nruns_per_cell=3\nmaster_seed=9\nw_sym=2\n"));
  EXPECT_EQ(s.creator_fractions, (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(s.base.weights.symmetry, 2.0);
  KeyValues kv;
  for (const auto& [k, v] : describe(s)) kv[k] = v;
  const SweepSpec back = resolve_sweep_spec(kv);
  EXPECT_EQ(back.creator_fractions, s.creator_fractions);
  EXPECT_EQ(back.base, s.base);
  EXPECT_EQ(back.master_seed, 9u);
}

TEST(Config, SweepRejectsRunOnlyKeysAndBadLists) {
  EXPECT_THROW(resolve_sweep_spec(parse_key_values("seed=3")), ConfigError);
  EXPECT_THROW(resolve_sweep_spec(parse_key_values("invent_rates=0")), ConfigError);
  EXPECT_THROW(resolve_sweep_spec(parse_key_values("creator_fractions=0.1,x")), ConfigError);
  EXPECT_THROW(resolve_sweep_spec(parse_key_values("runs_per_cell=0")), ConfigError);
}

TEST(Config, FormatRealIsShortestRoundTrip) {
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(16.0), "16");
  EXPECT_EQ(std::stod(format_real(1.0 / 6.0)), 1.0 / 6.0);
}

}  // namespace
}  // namespace evoc
