#include "evoc/fitness.hpp"

#include <cmath>
#include <stdexcept>

namespace evoc {

void FitnessWeights::validate() const {
  if (!std::isfinite(move) || move < 0.0) {
    throw std::invalid_argument("w_move must be a non-negative number");
  }
  if (!std::isfinite(symmetry) || symmetry < 0.0) {
    throw std::invalid_argument("w_sym must be a non-negative number");
  }
}

double f1(const Action& action, const FitnessWeights& weights) {
  return f1(trend_signals(action), weights);
}

FitnessTable::FitnessTable(const FitnessWeights& weights) : weights_(weights) {
  weights_.validate();
  for (int i = 0; i < kActionCount; ++i) {
    const auto signals = trend_signals(Action::decode(i));
    rows_[i] = {i, signals, f1(signals, weights_)};
    if (rows_[i].fitness > max_fitness_) max_fitness_ = rows_[i].fitness;
  }
}

std::vector<Action> FitnessTable::argmax() const {
  std::vector<Action> out;
  for (const auto& row : rows_) {
    if (row.fitness == max_fitness_) out.push_back(Action::decode(row.encoding));
  }
  return out;
}

}  // namespace evoc
