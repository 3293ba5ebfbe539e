#pragma once

#include <array>
#include <optional>
#include <span>

#include "evoc/action.hpp"
#include "evoc/fitness.hpp"
#include "evoc/random.hpp"
#include "evoc/trends.hpp"

namespace evoc {

/// Adaptive probabilities that bias invention (the knowledge-based
/// operators). Updates move a value by 0.1 and clamp it into [0, 1].
struct OperatorState {
  static constexpr double kStep = 0.1;
  static constexpr double kInitial = 0.5;

  /// Per part: probability that a change event increases movement.
  std::array<double, kBodyPartCount> increase_movement{
      kInitial, kInitial, kInitial, kInitial, kInitial, kInitial};
  /// Probability that a newly moving paired limb opposes its moving partner.
  double symmetry_bias = kInitial;

  double decrease_movement(BodyPart part) const {
    return 1.0 - increase_movement[index_of(part)];
  }

  friend bool operator==(const OperatorState&, const OperatorState&) = default;
};

/// Movement rule: raise every per-part probability when the adopted action
/// moves more parts than the one it replaces, lower it when it moves fewer.
OperatorState update_movement_operator(OperatorState operators,
                                       const TrendSignals& previous,
                                       const TrendSignals& adopted);

/// Symmetry rule, same shape as the movement rule but keyed on opposed pairs.
OperatorState update_symmetry_operator(OperatorState operators,
                                       const TrendSignals& previous,
                                       const TrendSignals& adopted);

class Role {
 public:
  static constexpr Role imitator() { return Role(false, 0.0); }
  /// Throws std::invalid_argument unless 0 <= invent_rate <= 1.
  static Role creator(double invent_rate);

  constexpr bool is_creator() const { return creator_; }
  constexpr double invent_rate() const { return invent_rate_; }

  friend constexpr bool operator==(const Role&, const Role&) = default;

 private:
  constexpr Role(bool creator, double rate)
      : creator_(creator), invent_rate_(rate) {}
  bool creator_;
  double invent_rate_;
};

struct Cell {
  int x = 0;
  int y = 0;
  friend constexpr bool operator==(const Cell&, const Cell&) = default;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Adoption { None, Invented, Imitated };

class Agent {
 public:
  Agent(int id, Cell position, Role role, const FitnessWeights& weights);

  int id() const { return id_; }
  Cell position() const { return position_; }
  const Role& role() const { return role_; }
  /// The implemented action; the only part of an agent neighbors observe.
  const Action& action() const { return action_; }
  double fitness() const { return fitness_; }
  const OperatorState& operators() const { return operators_; }

  /// Learn and implement `next`, updating both operators. Callers guarantee
  /// `next_fitness` is f1(next) and strictly exceeds the current fitness.
  void adopt(const Action& next, double next_fitness);

 private:
  int id_;
  Cell position_;
  Role role_;
  Action action_;
  double fitness_ = 0.0;
  OperatorState operators_;
};

/// Sample a candidate idea from `current`.
///
/// Each part independently has a change event with probability
/// `change_prob`. A change event increases movement with the part's
/// `increase_movement` probability, otherwise decreases it. Increasing a
/// stationary part sets it moving; increasing a moving part flips its
/// direction. Decreasing makes a moving part stationary and leaves a
/// stationary one alone. A paired limb starting to move while its partner
/// moves takes the opposite direction with probability `symmetry_bias`,
/// otherwise the same one; anything else picks LEFT or RIGHT uniformly.
/// Parts are visited in body-part order and the partner's state is read from
/// the candidate built so far.
Action invent(const Action& current, const OperatorState& operators,
              double change_prob, Rng& rng);

/// Invent a candidate and adopt it if mental simulation rates it strictly
/// fitter than the current action.
std::optional<Action> try_invent(Agent& agent, const FitnessWeights& weights,
                                 double change_prob, Rng& rng);

/// Inspect neighbors' implemented actions in uniformly random order and
/// adopt the first one that is strictly fitter. Returns nothing if no
/// neighbor beats the agent's current action.
std::optional<Action> try_imitate(Agent& agent,
                                  std::span<const Action> neighbor_actions,
                                  const FitnessWeights& weights, Rng& rng);

}  // namespace evoc
