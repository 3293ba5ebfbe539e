#pragma once

#include <cstddef>
#include <vector>

#include "evoc/agent.hpp"
#include "evoc/fitness.hpp"
#include "evoc/random.hpp"

namespace evoc {

enum class Topology { Toroidal, Bounded };
enum class Neighborhood { Moore, VonNeumann };

struct WorldConfig {
  int width = 10;
  int height = 10;
  Topology topology = Topology::Toroidal;
  Neighborhood neighborhood = Neighborhood::VonNeumann;
  double creator_fraction = 0.0;
  double creator_invent_rate = 1.0;

  int population() const { return width * height; }
  /// round(creator_fraction * population), halves away from zero.
  int creator_count() const;
  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  friend bool operator==(const WorldConfig&, const WorldConfig&) = default;
};

/// Fully populated grid, one agent per cell, agents indexed row-major.
class World {
 public:
  /// Every agent starts immobile with initial operators. Creators are a
  /// uniformly random subset of size config.creator_count(), drawn from `rng`.
  World(const WorldConfig& config, const FitnessWeights& weights, Rng& rng);

  const WorldConfig& config() const { return config_; }
  std::size_t size() const { return agents_.size(); }

  Agent& agent(std::size_t index) { return agents_[index]; }
  const Agent& agent(std::size_t index) const { return agents_[index]; }
  const std::vector<Agent>& agents() const { return agents_; }

  std::size_t index_of(Cell cell) const;
  Cell cell_of(std::size_t index) const;

  std::vector<Cell> neighbors(Cell cell) const;
  const std::vector<std::size_t>& neighbor_indices(std::size_t index) const {
    return neighbor_indices_[index];
  }

  int creator_count() const;

 private:
  WorldConfig config_;
  std::vector<Agent> agents_;
  std::vector<std::vector<std::size_t>> neighbor_indices_;
};

inline World build_world(const WorldConfig& config,
                         const FitnessWeights& weights, Rng& rng) {
  return World(config, weights, rng);
}

/// Neighbor cells of `cell` on a grid described by `config`, excluding the
/// cell itself and without duplicates. Order: row by row, dy then dx.
std::vector<Cell> grid_neighbors(const WorldConfig& config, Cell cell);

double mean_fitness(const World& world);
double max_fitness(const World& world);
/// Number of distinct implemented actions.
int diversity(const World& world);

}  // namespace evoc
