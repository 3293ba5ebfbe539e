#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "evoc/fitness.hpp"
#include "evoc/random.hpp"
#include "evoc/world.hpp"

namespace evoc {

enum class UpdateOrder { Shuffled, FixedScan };

/// Immediate: an adoption is visible to agents processed later in the same
/// iteration. Snapshot: imitation observes actions as they stood when the
/// iteration began.
enum class Visibility { Immediate, Snapshot };

struct RunConfig {
  WorldConfig world;
  int iterations = 15;
  double change_prob = 1.0 / 6.0;
  FitnessWeights weights;
  std::uint64_t seed = 1;
  UpdateOrder update_order = UpdateOrder::Shuffled;
  Visibility visibility = Visibility::Snapshot;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct MetricsRecord {
  int iteration = 0;
  double mean_fitness = 0.0;
  double max_fitness = 0.0;
  int diversity = 0;
  int invention_adoptions = 0;
  int imitation_adoptions = 0;

  friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

MetricsRecord measure(const World& world, int iteration);

/// One run: a world plus the random stream everything is drawn from.
///
/// Draw sequence: building the world shuffles the cell indices once to place
/// creators. Each step then shuffles the processing order (Shuffled only),
/// and for each agent in that order: a creator draws once to choose between
/// inventing and imitating, then the chosen operation draws what it needs.
/// Metrics never touch the stream.
class Simulation {
 public:
  explicit Simulation(const RunConfig& config);

  const World& world() const { return world_; }
  const RunConfig& config() const { return config_; }
  int iteration() const { return iteration_; }

  MetricsRecord step();

 private:
  RunConfig config_;
  Rng rng_;
  World world_;
  std::vector<std::size_t> order_;
  std::vector<Action> observed_;
  int iteration_ = 0;
};

using StepObserver = std::function<void(const World&, const MetricsRecord&)>;

/// Baseline record (iteration 0) followed by one record per step. The
/// observer, if set, sees the world after the baseline and after each step.
std::vector<MetricsRecord> run(const RunConfig& config,
                               const StepObserver& observer = {});

}  // namespace evoc
