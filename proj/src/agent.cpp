#include "evoc/agent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace evoc {

namespace {

double step_toward(double value, int direction) {
  if (direction > 0) return std::min(1.0, value + OperatorState::kStep);
  if (direction < 0) return std::max(0.0, value - OperatorState::kStep);
  return value;
}

int compare(int adopted, int previous) {
  return (adopted > previous) - (adopted < previous);
}

PartState random_direction(Rng& rng) {
  return rng.bernoulli(0.5) ? PartState::Left : PartState::Right;
}

}  // namespace

OperatorState update_movement_operator(OperatorState operators,
                                       const TrendSignals& previous,
                                       const TrendSignals& adopted) {
  const int direction = compare(adopted.movement, previous.movement);
  for (auto& p : operators.increase_movement) p = step_toward(p, direction);
  return operators;
}

OperatorState update_symmetry_operator(OperatorState operators,
                                       const TrendSignals& previous,
                                       const TrendSignals& adopted) {
  operators.symmetry_bias = step_toward(
      operators.symmetry_bias, compare(adopted.symmetry, previous.symmetry));
  return operators;
}

Role Role::creator(double invent_rate) {
  if (!(invent_rate >= 0.0 && invent_rate <= 1.0)) {
    throw std::invalid_argument("invent rate must lie in [0, 1]");
  }
  return Role(true, invent_rate);
}

Agent::Agent(int id, Cell position, Role role, const FitnessWeights& weights)
    : id_(id),
      position_(position),
      role_(role),
      fitness_(f1(action_, weights)) {}

void Agent::adopt(const Action& next, double next_fitness) {
  const auto previous = trend_signals(action_);
  const auto adopted = trend_signals(next);
  operators_ = update_movement_operator(operators_, previous, adopted);
  operators_ = update_symmetry_operator(operators_, previous, adopted);
  action_ = next;
  fitness_ = next_fitness;
}

Action invent(const Action& current, const OperatorState& operators,
              double change_prob, Rng& rng) {
  Action candidate = current;
  for (auto part : kAllBodyParts) {
    if (!rng.bernoulli(change_prob)) continue;
    const PartState state = candidate[part];
    const bool increase =
        rng.bernoulli(operators.increase_movement[index_of(part)]);
    if (!increase) {
      candidate.set(part, PartState::Stationary);
      continue;
    }
    if (is_moving(state)) {
      candidate.set(part, opposite(state));
      continue;
    }
    const PartState partner = candidate[partner_of(part)];
    if (is_paired(part) && is_moving(partner)) {
      candidate.set(part, rng.bernoulli(operators.symmetry_bias)
                              ? opposite(partner)
                              : partner);
    } else {
      candidate.set(part, random_direction(rng));
    }
  }
  return candidate;
}

std::optional<Action> try_invent(Agent& agent, const FitnessWeights& weights,
                                 double change_prob, Rng& rng) {
  const Action candidate =
      invent(agent.action(), agent.operators(), change_prob, rng);
  const double fitness = f1(candidate, weights);
  if (fitness > agent.fitness()) {
    agent.adopt(candidate, fitness);
    return candidate;
  }
  return std::nullopt;
}

std::optional<Action> try_imitate(Agent& agent,
                                  std::span<const Action> neighbor_actions,
                                  const FitnessWeights& weights, Rng& rng) {
  if (neighbor_actions.empty()) {
    throw std::invalid_argument("try_imitate needs at least one neighbor");
  }
  std::vector<std::size_t> order(neighbor_actions.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Incremental Fisher-Yates: draw only as many as get inspected.
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t j = i + rng.below(order.size() - i);
    std::swap(order[i], order[j]);
    const Action& observed = neighbor_actions[order[i]];
    const double fitness = f1(observed, weights);
    if (fitness > agent.fitness()) {
      agent.adopt(observed, fitness);
      return observed;
    }
  }
  return std::nullopt;
}

}  // namespace evoc
