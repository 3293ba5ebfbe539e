#include "evoc/trends.hpp"

namespace evoc {

int movement_activation(const Action& action) {
  int count = 0;
  for (auto state : action.states()) {
    count += is_moving(state) ? 1 : 0;
  }
  return count;
}

int symmetry_activation(const Action& action) {
  auto opposed = [&](BodyPart a, BodyPart b) {
    return is_moving(action[a]) && action[b] == opposite(action[a]);
  };
  return (opposed(BodyPart::LeftArm, BodyPart::RightArm) ? 1 : 0) +
         (opposed(BodyPart::LeftLeg, BodyPart::RightLeg) ? 1 : 0);
}

}  // namespace evoc
