#pragma once

#include "evoc/action.hpp"

namespace evoc {

/// Activations of the MOVEMENT and SYMMETRY hidden concepts for an action.
///
/// movement counts non-stationary parts (0..6). symmetry counts limb pairs
/// (arms, legs) whose members move in opposite directions (0..2); HEAD and
/// HIPS feed movement only.
struct TrendSignals {
  int movement = 0;
  int symmetry = 0;

  friend constexpr bool operator==(const TrendSignals&,
                                   const TrendSignals&) = default;
};

int movement_activation(const Action& action);
int symmetry_activation(const Action& action);

inline TrendSignals trend_signals(const Action& action) {
  return {movement_activation(action), symmetry_activation(action)};
}

/// Source of trend signals for the knowledge-based operators. The default
/// reads the signals straight off the action; a learned detector can be
/// dropped in behind the same interface.
class TrendSignalProvider {
 public:
  virtual ~TrendSignalProvider() = default;
  virtual TrendSignals detect(const Action& action) const = 0;
};

class DirectTrendSignals final : public TrendSignalProvider {
 public:
  TrendSignals detect(const Action& action) const override {
    return trend_signals(action);
  }
};

}  // namespace evoc
