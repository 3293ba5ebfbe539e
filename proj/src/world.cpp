#include "evoc/world.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace evoc {

int WorldConfig::creator_count() const {
  return static_cast<int>(std::lround(creator_fraction * population()));
}

void WorldConfig::validate() const {
  if (width <= 0) throw std::invalid_argument("width must be positive");
  if (height <= 0) throw std::invalid_argument("height must be positive");
  if (!(creator_fraction >= 0.0 && creator_fraction <= 1.0)) {
    throw std::invalid_argument("creator_fraction must lie in [0, 1]");
  }
  if (!(creator_invent_rate >= 0.0 && creator_invent_rate <= 1.0)) {
    throw std::invalid_argument("creator_invent_rate must lie in [0, 1]");
  }
}

std::vector<Cell> grid_neighbors(const WorldConfig& config, Cell cell) {
  if (cell.x < 0 || cell.x >= config.width || cell.y < 0 ||
      cell.y >= config.height) {
    throw std::out_of_range("cell outside the grid");
  }
  std::vector<Cell> out;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0) continue;
      if (config.neighborhood == Neighborhood::VonNeumann && dx != 0 &&
          dy != 0) {
        continue;
      }
      int x = cell.x + dx;
      int y = cell.y + dy;
      if (config.topology == Topology::Toroidal) {
        x = (x + config.width) % config.width;
        y = (y + config.height) % config.height;
      } else if (x < 0 || x >= config.width || y < 0 || y >= config.height) {
        continue;
      }
      const Cell n{x, y};
      // Narrow tori wrap onto the centre or onto an already listed cell.
      if (n == cell || std::find(out.begin(), out.end(), n) != out.end()) {
        continue;
      }
      out.push_back(n);
    }
  }
  return out;
}

World::World(const WorldConfig& config, const FitnessWeights& weights,
             Rng& rng)
    : config_(config) {
  config_.validate();
  weights.validate();
  const auto n = static_cast<std::size_t>(config_.population());

  std::vector<std::size_t> placement(n);
  std::iota(placement.begin(), placement.end(), std::size_t{0});
  rng.shuffle(std::span(placement));
  std::vector<bool> is_creator(n, false);
  const auto creators = static_cast<std::size_t>(config_.creator_count());
  for (std::size_t i = 0; i < creators; ++i) is_creator[placement[i]] = true;

  agents_.reserve(n);
  neighbor_indices_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Role role = is_creator[i]
                          ? Role::creator(config_.creator_invent_rate)
                          : Role::imitator();
    agents_.emplace_back(static_cast<int>(i), cell_of(i), role, weights);
    std::vector<std::size_t> idx;
    for (auto c : grid_neighbors(config_, cell_of(i))) idx.push_back(index_of(c));
    neighbor_indices_.push_back(std::move(idx));
  }
}

std::size_t World::index_of(Cell cell) const {
  return static_cast<std::size_t>(cell.y) * config_.width + cell.x;
}

Cell World::cell_of(std::size_t index) const {
  const int i = static_cast<int>(index);
  return {i % config_.width, i / config_.width};
}

std::vector<Cell> World::neighbors(Cell cell) const {
  return grid_neighbors(config_, cell);
}

int World::creator_count() const {
  return static_cast<int>(std::count_if(
      agents_.begin(), agents_.end(),
      [](const Agent& a) { return a.role().is_creator(); }));
}

double mean_fitness(const World& world) {
  double sum = 0.0;
  for (const auto& a : world.agents()) sum += a.fitness();
  return world.size() == 0 ? 0.0 : sum / static_cast<double>(world.size());
}

double max_fitness(const World& world) {
  double best = 0.0;
  for (const auto& a : world.agents()) best = std::max(best, a.fitness());
  return best;
}

int diversity(const World& world) {
  std::bitset<kActionCount> seen;
  for (const auto& a : world.agents()) seen.set(a.action().encode());
  return static_cast<int>(seen.count());
}

}  // namespace evoc
