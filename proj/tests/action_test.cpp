#include "evoc/action.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

namespace evoc {
namespace {

TEST(Action, EncodesKnownActions) {
  EXPECT_EQ(Action::immobile().encode(), 0);

  Action left_arm;
  left_arm.set(BodyPart::LeftArm, PartState::Left);
  EXPECT_EQ(left_arm.encode(), 1);

  Action hips_right;
  hips_right.set(BodyPart::Hips, PartState::Right);
  EXPECT_EQ(hips_right.encode(), 486);
}

TEST(Action, DecodesKnownIndices) {
  EXPECT_EQ(Action::decode(0), Action::immobile());

  const Action one = Action::decode(1);
  EXPECT_EQ(one[BodyPart::LeftArm], PartState::Left);
  for (std::size_t i = 1; i < kBodyPartCount; ++i) {
    EXPECT_EQ(one.at(i), PartState::Stationary);
  }

  const Action last = Action::decode(728);
  for (auto part : kAllBodyParts) EXPECT_EQ(last[part], PartState::Right);
}

TEST(Action, RejectsOutOfRangeIndex) {
  EXPECT_THROW(Action::decode(-1), std::out_of_range);
  EXPECT_THROW(Action::decode(729), std::out_of_range);
}

TEST(Action, ExhaustiveRoundTrip) {
  std::set<int> seen;
  for (int i = 0; i < kActionCount; ++i) {
    const Action a = Action::decode(i);
    ASSERT_EQ(a.encode(), i);
    seen.insert(a.encode());
  }
  EXPECT_EQ(seen.size(), 729u);
}

TEST(Action, MirrorIsAnInvolution) {
  for (int i = 0; i < kActionCount; ++i) {
    const Action a = Action::decode(i);
    EXPECT_EQ(a.mirrored().mirrored(), a);
    EXPECT_EQ(a.distance(a.mirrored()) == 0, a == Action::immobile());
  }
}

TEST(BodyPart, Pairs) {
  EXPECT_EQ(partner_of(BodyPart::LeftArm), BodyPart::RightArm);
  EXPECT_EQ(partner_of(BodyPart::RightLeg), BodyPart::LeftLeg);
  EXPECT_FALSE(is_paired(BodyPart::Head));
  EXPECT_FALSE(is_paired(BodyPart::Hips));
  EXPECT_STREQ(to_string(BodyPart::Hips), "HIPS");
}

}  // namespace
}  // namespace evoc
