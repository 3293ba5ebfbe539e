#include "evoc/world.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace evoc {
namespace {

WorldConfig grid(int w, int h, Topology t, Neighborhood n) {
  WorldConfig c;
  c.width = w;
  c.height = h;
  c.topology = t;
  c.neighborhood = n;
  return c;
}

TEST(World, CreatorCountFollowsRounding) {
  WorldConfig c;
  c.creator_fraction = 0.35;
  Rng rng(1);
  EXPECT_EQ(World(c, {}, rng).creator_count(), 35);
  c.creator_fraction = 0.0;
  EXPECT_EQ(World(c, {}, rng).creator_count(), 0);
  c.creator_fraction = 1.0;
  EXPECT_EQ(World(c, {}, rng).creator_count(), 100);
  c.width = 5;
  c.height = 1;
  c.creator_fraction = 0.5;  // 2.5 rounds away from zero
  EXPECT_EQ(c.creator_count(), 3);
}

TEST(World, FreshWorldIsImmobile) {
  WorldConfig c;
  c.creator_fraction = 0.4;
  c.creator_invent_rate = 0.75;
  Rng rng(2);
  const World world(c, {}, rng);
  ASSERT_EQ(world.size(), 100u);
  for (const auto& a : world.agents()) {
    EXPECT_EQ(a.action(), Action::immobile());
    EXPECT_EQ(a.fitness(), 0.0);
    EXPECT_EQ(a.operators(), OperatorState{});
    if (a.role().is_creator()) EXPECT_EQ(a.role().invent_rate(), 0.75);
    EXPECT_EQ(world.cell_of(world.index_of(a.position())), a.position());
  }
  EXPECT_EQ(diversity(world), 1);
  EXPECT_EQ(mean_fitness(world), 0.0);
}

TEST(World, CreatorPlacementVariesWithSeed) {
  WorldConfig c;
  c.creator_fraction = 0.3;
  std::set<std::vector<bool>> layouts;
  std::vector<int> hits(100, 0);
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    Rng rng(seed);
    const World world(c, {}, rng);
    std::vector<bool> layout;
    for (const auto& a : world.agents()) {
      layout.push_back(a.role().is_creator());
      hits[a.id()] += a.role().is_creator();
    }
    layouts.insert(layout);
  }
  EXPECT_GT(layouts.size(), 1990u);
  // Each cell is a creator with probability 0.3: 600 of 2000 expected.
  for (int h : hits) EXPECT_NEAR(h, 600, 5 * std::sqrt(2000 * 0.3 * 0.7));
}

TEST(World, RejectsBadConfig) {
  Rng rng(3);
  WorldConfig c;
  c.width = 0;
  EXPECT_THROW(World(c, {}, rng), std::invalid_argument);
  c = {};
  c.creator_fraction = 1.5;
  EXPECT_THROW(World(c, {}, rng), std::invalid_argument);
  c = {};
  c.creator_invent_rate = -0.1;
  EXPECT_THROW(World(c, {}, rng), std::invalid_argument);
}

TEST(Neighbors, ToroidalMooreHasEight) {
  const auto c = grid(10, 10, Topology::Toroidal, Neighborhood::Moore);
  for (int y = 0; y < 10; ++y)
    for (int x = 0; x < 10; ++x) EXPECT_EQ(grid_neighbors(c, {x, y}).size(), 8u);
}

TEST(Neighbors, BoundedMooreCorner) {
  const auto c = grid(10, 10, Topology::Bounded, Neighborhood::Moore);
  EXPECT_EQ(grid_neighbors(c, {0, 0}).size(), 3u);
  EXPECT_EQ(grid_neighbors(c, {9, 9}).size(), 3u);
  EXPECT_EQ(grid_neighbors(c, {0, 5}).size(), 5u);
  EXPECT_EQ(grid_neighbors(c, {4, 5}).size(), 8u);
}

TEST(Neighbors, ToroidalVonNeumannWraps) {
  const auto c = grid(10, 10, Topology::Toroidal, Neighborhood::VonNeumann);
  auto n = grid_neighbors(c, {0, 0});
  std::sort(n.begin(), n.end());
  const std::vector<Cell> expected{{0, 1}, {0, 9}, {1, 0}, {9, 0}};
  EXPECT_EQ(n, expected);
}

TEST(Neighbors, NarrowTorusHasNoDuplicatesOrSelf) {
  const auto c = grid(2, 1, Topology::Toroidal, Neighborhood::Moore);
  const auto n = grid_neighbors(c, {0, 0});
  ASSERT_EQ(n.size(), 1u);
  EXPECT_EQ(n[0], (Cell{1, 0}));
  EXPECT_TRUE(grid_neighbors(grid(1, 1, Topology::Toroidal, Neighborhood::Moore), {0, 0}).empty());
}

TEST(Neighbors, RelationIsSymmetricAndTorusIsRegular) {
  for (auto t : {Topology::Toroidal, Topology::Bounded}) {
    for (auto nb : {Neighborhood::Moore, Neighborhood::VonNeumann}) {
      for (auto [w, h] : {std::pair{10, 10}, std::pair{7, 3}, std::pair{2, 5}}) {
        const auto c = grid(w, h, t, nb);
        std::set<std::size_t> degrees;
        for (int y = 0; y < h; ++y) {
          for (int x = 0; x < w; ++x) {
            const auto ns = grid_neighbors(c, {x, y});
            degrees.insert(ns.size());
            for (const auto& n : ns) {
              const auto back = grid_neighbors(c, n);
              EXPECT_NE(std::find(back.begin(), back.end(), Cell{x, y}), back.end());
            }
          }
        }
        if (t == Topology::Toroidal) EXPECT_EQ(degrees.size(), 1u);
      }
    }
  }
}

TEST(Neighbors, OutOfGridCellRejected) {
  EXPECT_THROW(grid_neighbors(WorldConfig{}, {10, 0}), std::out_of_range);
}

TEST(Metrics, DiversityCountsDistinctActions) {
  WorldConfig c;
  Rng rng(4);
  World world(c, {}, rng);
  Action one = Action::decode(1);
  world.agent(17).adopt(one, f1(one));
  EXPECT_EQ(diversity(world), 2);
  EXPECT_DOUBLE_EQ(mean_fitness(world), 0.01);
  EXPECT_EQ(max_fitness(world), 1.0);

  World best(c, {}, rng);
  const Action optimum = Action::decode(1 + 2 * 3 + 2 * 9 + 1 * 27 + 1 * 81 + 1 * 243);
  ASSERT_EQ(f1(optimum), 16.0);
  for (std::size_t i = 0; i < best.size(); ++i) best.agent(i).adopt(optimum, 16.0);
  EXPECT_EQ(mean_fitness(best), 16.0);
  EXPECT_EQ(diversity(best), 1);
}

}  // namespace
}  // namespace evoc
