#pragma once

#include <array>
#include <vector>

#include "evoc/action.hpp"
#include "evoc/trends.hpp"

namespace evoc {

/// Parameters of the mating-display fitness F1. Defaults give a unique global
/// optimum of 16 (six moving parts plus two opposed limb pairs).
struct FitnessWeights {
  double move = 1.0;      ///< reward per moving part
  double symmetry = 5.0;  ///< reward per opposite-direction limb pair

  /// Throws std::invalid_argument on a negative or non-finite weight.
  void validate() const;

  friend bool operator==(const FitnessWeights&,
                         const FitnessWeights&) = default;
};

/// F1 = move * movement + symmetry * opposed pairs.
///
/// Limbs interact: moving RIGHT_ARM is worth `move` on its own but
/// `move + symmetry` when LEFT_ARM already moves the other way.
double f1(const Action& action, const FitnessWeights& weights = {});

inline double f1(const TrendSignals& signals,
                 const FitnessWeights& weights = {}) {
  return weights.move * signals.movement + weights.symmetry * signals.symmetry;
}

struct FitnessRow {
  int encoding = 0;
  TrendSignals signals;
  double fitness = 0.0;
};

/// F1 evaluated over the whole 729-action space, ordered by encoding.
class FitnessTable {
 public:
  explicit FitnessTable(const FitnessWeights& weights = {});

  const std::array<FitnessRow, kActionCount>& rows() const { return rows_; }
  const FitnessRow& operator[](int encoding) const { return rows_.at(encoding); }

  double max_fitness() const { return max_fitness_; }
  std::vector<Action> argmax() const;
  const FitnessWeights& weights() const { return weights_; }

 private:
  FitnessWeights weights_;
  std::array<FitnessRow, kActionCount> rows_{};
  double max_fitness_ = 0.0;
};

inline FitnessTable enumerate_fitness_table(const FitnessWeights& weights = {}) {
  return FitnessTable(weights);
}

}  // namespace evoc
