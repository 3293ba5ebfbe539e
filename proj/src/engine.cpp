#include "evoc/engine.hpp"

#include <numeric>
#include <stdexcept>

namespace evoc {

void RunConfig::validate() const {
  world.validate();
  weights.validate();
  if (iterations < 0) throw std::invalid_argument("iterations must be >= 0");
  if (!(change_prob >= 0.0 && change_prob <= 1.0)) {
    throw std::invalid_argument("change_prob must lie in [0, 1]");
  }
}

MetricsRecord measure(const World& world, int iteration) {
  MetricsRecord r;
  r.iteration = iteration;
  r.mean_fitness = mean_fitness(world);
  r.max_fitness = max_fitness(world);
  r.diversity = diversity(world);
  return r;
}

namespace {

const RunConfig& validated(const RunConfig& config) {
  config.validate();
  return config;
}

}  // namespace

Simulation::Simulation(const RunConfig& config)
    : config_(validated(config)),
      rng_(config.seed),
      world_(config_.world, config_.weights, rng_),
      order_(world_.size()) {
  std::iota(order_.begin(), order_.end(), std::size_t{0});
}

MetricsRecord Simulation::step() {
  ++iteration_;
  if (config_.update_order == UpdateOrder::Shuffled) {
    rng_.shuffle(std::span(order_));
  } else {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
  }

  std::vector<Action> snapshot;
  if (config_.visibility == Visibility::Snapshot) {
    snapshot.reserve(world_.size());
    for (const auto& a : world_.agents()) snapshot.push_back(a.action());
  }

  int invented = 0;
  int imitated = 0;
  for (const std::size_t index : order_) {
    Agent& agent = world_.agent(index);
    const bool inventing = agent.role().is_creator() &&
                           rng_.bernoulli(agent.role().invent_rate());
    if (inventing) {
      if (try_invent(agent, config_.weights, config_.change_prob, rng_)) {
        ++invented;
      }
      continue;
    }
    const auto& neighbors = world_.neighbor_indices(index);
    if (neighbors.empty()) continue;
    observed_.clear();
    for (const std::size_t n : neighbors) {
      observed_.push_back(snapshot.empty() ? world_.agent(n).action()
                                           : snapshot[n]);
    }
    if (try_imitate(agent, observed_, config_.weights, rng_)) ++imitated;
  }

  MetricsRecord record = measure(world_, iteration_);
  record.invention_adoptions = invented;
  record.imitation_adoptions = imitated;
  return record;
}

std::vector<MetricsRecord> run(const RunConfig& config,
                               const StepObserver& observer) {
  Simulation sim(config);
  std::vector<MetricsRecord> series;
  series.reserve(static_cast<std::size_t>(config.iterations) + 1);
  series.push_back(measure(sim.world(), 0));
  if (observer) observer(sim.world(), series.back());
  for (int t = 0; t < config.iterations; ++t) {
    series.push_back(sim.step());
    if (observer) observer(sim.world(), series.back());
  }
  return series;
}

}  // namespace evoc
