#include "evoc/experiments.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <stdexcept>

namespace evoc {
namespace {

SweepSpec small_spec() {
  SweepSpec spec;
  spec.creator_fractions = {0.0, 0.2, 0.5};
  spec.invent_rates = {1.0, 0.5};
  spec.runs_per_cell = 6;
  spec.measure_at_iteration = 8;
  spec.master_seed = 42;
  return spec;
}

TEST(Spearman, PerfectAndReversed) {
  const std::vector<double> x{1, 2, 3, 4, 5};
  EXPECT_DOUBLE_EQ(*spearman(x, std::vector<double>{10, 20, 25, 80, 81}), 1.0);
  EXPECT_DOUBLE_EQ(*spearman(x, std::vector<double>{5, 4, 3, 2, 1}), -1.0);
}

TEST(Spearman, ConstantSeriesIsUndefined) {
  const std::vector<double> x{1, 2, 3, 4};
  EXPECT_FALSE(spearman(x, std::vector<double>{2, 2, 2, 2}));
  EXPECT_FALSE(spearman(std::vector<double>{1, 2}, std::vector<double>{1, 2}));
}

TEST(Spearman, TiesUseAverageRanks) {
  // Ranks y: 1, 2.5, 2.5, 4 against x: 1..4 -> Pearson of ranks.
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{1, 5, 5, 9};
  const double rx[] = {1, 2, 3, 4};
  const double ry[] = {1, 2.5, 2.5, 4};
  double sxy = 0, sxx = 0, syy = 0;
  for (int i = 0; i < 4; ++i) {
    sxy += (rx[i] - 2.5) * (ry[i] - 2.5);
    sxx += (rx[i] - 2.5) * (rx[i] - 2.5);
    syy += (ry[i] - 2.5) * (ry[i] - 2.5);
  }
  EXPECT_NEAR(*spearman(x, y), sxy / std::sqrt(sxx * syy), 1e-12);
}

TEST(Summarize, MeanAndStandardError) {
  const std::vector<double> v{2, 4, 4, 4, 5, 5, 7, 9};
  const auto s = summarize(v);
  EXPECT_DOUBLE_EQ(s.mean, 5.0);
  EXPECT_NEAR(s.stderr_, std::sqrt(32.0 / 7.0) / std::sqrt(8.0), 1e-12);
  EXPECT_EQ(summarize(std::vector<double>{3.0}).stderr_, 0.0);
}

TEST(Sweep, RowsSortedAndCounted) {
  const auto table = sweep(small_spec());
  ASSERT_EQ(table.size(), 6u);
  EXPECT_EQ(table[0].invent_rate, 0.5);
  EXPECT_EQ(table[0].creator_fraction, 0.0);
  EXPECT_EQ(table[2].creator_fraction, 0.5);
  EXPECT_EQ(table[3].invent_rate, 1.0);
  for (const auto& c : table) EXPECT_EQ(c.n_runs, 6);
}

TEST(Sweep, ZeroCreatorCellIsExactlyFlat) {
  for (const auto& c : curve(sweep(small_spec()), 1.0)) {
    if (c.creator_fraction != 0.0) continue;
    EXPECT_EQ(c.mean_fitness_avg, 0.0);
    EXPECT_EQ(c.diversity_avg, 1.0);
    EXPECT_EQ(c.mean_fitness_stderr, 0.0);
  }
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  const auto spec = small_spec();
  const auto serial = sweep(spec, 1);
  EXPECT_EQ(serial, sweep(spec, 3));
  EXPECT_EQ(serial, sweep(spec, 8));
}

TEST(Sweep, CellReproducibleInIsolation) {
  auto spec = small_spec();
  const auto full = sweep(spec);
  spec.creator_fractions = {0.2};
  spec.invent_rates = {1.0};
  const auto single = sweep(spec);
  ASSERT_EQ(single.size(), 1u);
  const auto match = curve(full, 1.0);
  EXPECT_EQ(single[0], match[1]);
}

TEST(Sweep, CellMatchesIndividualRuns) {
  const auto spec = small_spec();
  std::vector<double> fitness;
  for (int r = 0; r < spec.runs_per_cell; ++r) {
    fitness.push_back(run(sweep_run_config(spec, 0.5, 0.5, r)).back().mean_fitness);
  }
  const auto expected = summarize(fitness);
  const auto row = curve(sweep(spec), 0.5).back();
  EXPECT_EQ(row.mean_fitness_avg, expected.mean);
  EXPECT_EQ(row.mean_fitness_stderr, expected.stderr_);
}

TEST(Sweep, RunSeedsAreDistinct) {
  std::set<std::uint64_t> seeds;
  for (double f : {0.0, 0.1, 0.2}) {
    for (double p : {0.5, 1.0}) {
      for (int r = 0; r < 50; ++r) seeds.insert(run_seed(7, f, p, r));
    }
  }
  EXPECT_EQ(seeds.size(), 300u);
  EXPECT_NE(run_seed(7, 0.1, 0.5, 0), run_seed(8, 0.1, 0.5, 0));
}

TEST(Sweep, RejectsEmptyLists) {
  auto spec = small_spec();
  spec.creator_fractions.clear();
  EXPECT_THROW(sweep(spec), std::invalid_argument);
  spec = small_spec();
  spec.invent_rates.clear();
  EXPECT_THROW(sweep(spec), std::invalid_argument);
  spec = small_spec();
  spec.invent_rates = {0.0};
  EXPECT_THROW(sweep(spec), std::invalid_argument);
}

TEST(Correlate, GroupsByInventRate) {
  std::vector<SweepCell> table;
  for (double f : {0.0, 0.5, 1.0}) {
    table.push_back({f, 0.5, 10.0 * f, 0, 3.0 - f, 0, 1});
    table.push_back({f, 1.0, 1.0, 0, f, 0, 1});
  }
  const auto fit = correlate(table, SweepField::CreatorFraction, SweepField::MeanFitness);
  EXPECT_DOUBLE_EQ(*fit.at(0.5), 1.0);
  EXPECT_FALSE(fit.at(1.0));
  const auto div = correlate(table, SweepField::CreatorFraction, SweepField::Diversity);
  EXPECT_DOUBLE_EQ(*div.at(0.5), -1.0);
  EXPECT_DOUBLE_EQ(*div.at(1.0), 1.0);
  table.pop_back();
  EXPECT_THROW(correlate(table, SweepField::CreatorFraction, SweepField::Diversity),
               std::invalid_argument);
}

}  // namespace
}  // namespace evoc
