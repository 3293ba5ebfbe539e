#include "evoc/action.hpp"

#include <stdexcept>

namespace evoc {

const char* to_string(BodyPart part) {
  switch (part) {
    case BodyPart::LeftArm:
      return "LEFT_ARM";
    case BodyPart::RightArm:
      return "RIGHT_ARM";
    case BodyPart::LeftLeg:
      return "LEFT_LEG";
    case BodyPart::RightLeg:
      return "RIGHT_LEG";
    case BodyPart::Head:
      return "HEAD";
    case BodyPart::Hips:
      return "HIPS";
  }
  return "?";
}

const char* to_string(PartState state) {
  switch (state) {
    case PartState::Stationary:
      return "STATIONARY";
    case PartState::Left:
      return "LEFT";
    case PartState::Right:
      return "RIGHT";
  }
  return "?";
}

Action Action::decode(int index) {
  if (index < 0 || index >= kActionCount) {
    throw std::out_of_range("action index out of range: " +
                            std::to_string(index));
  }
  Action action;
  for (std::size_t i = 0; i < kBodyPartCount; ++i) {
    action.states_[i] = static_cast<PartState>(index % 3);
    index /= 3;
  }
  return action;
}

int Action::encode() const {
  int index = 0;
  for (std::size_t i = kBodyPartCount; i-- > 0;) {
    index = index * 3 + static_cast<int>(states_[i]);
  }
  return index;
}

Action Action::mirrored() const {
  Action out;
  for (std::size_t i = 0; i < kBodyPartCount; ++i) {
    out.states_[i] = opposite(states_[i]);
  }
  return out;
}

int Action::distance(const Action& other) const {
  int d = 0;
  for (std::size_t i = 0; i < kBodyPartCount; ++i) {
    d += states_[i] != other.states_[i] ? 1 : 0;
  }
  return d;
}

std::string Action::to_string() const {
  // One letter per part in body-part order: S, L or R.
  std::string out(kBodyPartCount, 'S');
  for (std::size_t i = 0; i < kBodyPartCount; ++i) {
    if (states_[i] == PartState::Left) out[i] = 'L';
    if (states_[i] == PartState::Right) out[i] = 'R';
  }
  return out;
}

}  // namespace evoc
