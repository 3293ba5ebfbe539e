#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace evoc {

enum class BodyPart : std::uint8_t {
  LeftArm = 0,
  RightArm = 1,
  LeftLeg = 2,
  RightLeg = 3,
  Head = 4,
  Hips = 5,
};

enum class PartState : std::uint8_t {
  Stationary = 0,
  Left = 1,
  Right = 2,
};

inline constexpr std::size_t kBodyPartCount = 6;
inline constexpr int kActionCount = 729;  // 3^6

inline constexpr std::array<BodyPart, kBodyPartCount> kAllBodyParts = {
    BodyPart::LeftArm, BodyPart::RightArm, BodyPart::LeftLeg,
    BodyPart::RightLeg, BodyPart::Head,    BodyPart::Hips};

constexpr std::size_t index_of(BodyPart part) {
  return static_cast<std::size_t>(part);
}

constexpr bool is_moving(PartState s) { return s != PartState::Stationary; }

constexpr PartState opposite(PartState s) {
  switch (s) {
    case PartState::Left:
      return PartState::Right;
    case PartState::Right:
      return PartState::Left;
    default:
      return PartState::Stationary;
  }
}

/// The limb paired with `part` (arms with arms, legs with legs). HEAD and
/// HIPS have no partner and map to themselves.
constexpr BodyPart partner_of(BodyPart part) {
  switch (part) {
    case BodyPart::LeftArm:
      return BodyPart::RightArm;
    case BodyPart::RightArm:
      return BodyPart::LeftArm;
    case BodyPart::LeftLeg:
      return BodyPart::RightLeg;
    case BodyPart::RightLeg:
      return BodyPart::LeftLeg;
    default:
      return part;
  }
}

constexpr bool is_paired(BodyPart part) { return partner_of(part) != part; }

const char* to_string(BodyPart part);
const char* to_string(PartState state);

/// One thresholded posture of the body: a state for each of the six parts.
///
/// Actions have a canonical integer encoding in [0, 729): part i contributes
/// digit(i) * 3^i with STATIONARY=0, LEFT=1, RIGHT=2, so part 0 (LEFT_ARM) is
/// the least significant base-3 digit. CSV outputs use this encoding.
class Action {
 public:
  constexpr Action() = default;
  explicit constexpr Action(const std::array<PartState, kBodyPartCount>& states)
      : states_(states) {}

  static constexpr Action immobile() { return Action{}; }

  /// Throws std::out_of_range unless 0 <= index < 729.
  static Action decode(int index);

  int encode() const;

  constexpr PartState operator[](BodyPart part) const {
    return states_[index_of(part)];
  }
  constexpr PartState at(std::size_t i) const { return states_.at(i); }

  constexpr void set(BodyPart part, PartState state) {
    states_[index_of(part)] = state;
  }

  /// Global LEFT<->RIGHT exchange.
  Action mirrored() const;

  /// Number of parts whose state differs from `other`.
  int distance(const Action& other) const;

  const std::array<PartState, kBodyPartCount>& states() const {
    return states_;
  }

  std::string to_string() const;

  friend constexpr bool operator==(const Action&, const Action&) = default;

 private:
  std::array<PartState, kBodyPartCount> states_{};
};

}  // namespace evoc
