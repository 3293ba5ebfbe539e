#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "evoc/engine.hpp"

namespace evoc {

struct SweepSpec {
  std::vector<double> creator_fractions{0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                        0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<double> invent_rates{0.25, 0.5, 0.75, 1.0};
  int runs_per_cell = 100;
  int measure_at_iteration = 15;
  /// Template for every run; creator_fraction, creator_invent_rate,
  /// iterations and seed are overwritten per run.
  RunConfig base;
  std::uint64_t master_seed = 1;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct SweepCell {
  double creator_fraction = 0.0;
  double invent_rate = 0.0;
  double mean_fitness_avg = 0.0;
  double mean_fitness_stderr = 0.0;
  double diversity_avg = 0.0;
  double diversity_stderr = 0.0;
  int n_runs = 0;

  friend bool operator==(const SweepCell&, const SweepCell&) = default;
};

/// Seed of run `run` in cell (creator_fraction, invent_rate). Depends only
/// on the cell's values, never on its position in the sweep.
std::uint64_t run_seed(std::uint64_t master_seed, double creator_fraction,
                       double invent_rate, int run);

/// Fully resolved config of one run of a sweep.
RunConfig sweep_run_config(const SweepSpec& spec, double creator_fraction,
                           double invent_rate, int run);

/// Sample mean and standard error (n - 1 denominator; 0 for n < 2).
struct Summary {
  double mean = 0.0;
  double stderr_ = 0.0;
};
Summary summarize(std::span<const double> values);

/// Run every (fraction, rate) cell and aggregate the metrics recorded at
/// `measure_at_iteration`. Rows come back sorted by (invent_rate,
/// creator_fraction). Output is identical for every `threads` value.
std::vector<SweepCell> sweep(const SweepSpec& spec, int threads = 1);

/// Spearman rank correlation with average ranks for ties. Empty when either
/// series is constant or the series have fewer than three points.
std::optional<double> spearman(std::span<const double> x,
                               std::span<const double> y);

enum class SweepField {
  CreatorFraction,
  InventRate,
  MeanFitness,
  MeanFitnessStderr,
  Diversity,
  DiversityStderr,
};

double field_value(const SweepCell& cell, SweepField field);

/// Spearman correlation of `y` against `x` within each invent_rate group.
/// Throws std::invalid_argument if a group has fewer than three rows.
std::map<double, std::optional<double>> correlate(
    std::span<const SweepCell> table, SweepField x, SweepField y);

/// Rows of `table` with the given invent_rate, ordered by creator_fraction.
std::vector<SweepCell> curve(std::span<const SweepCell> table,
                             double invent_rate);

}  // namespace evoc
