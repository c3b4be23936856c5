#include "rigid/idempotent_split.hpp"

#include <gtest/gtest.h>

#include "rigid/graded_map.hpp"
#include "rigid/group_algebra.hpp"
#include "rigid/rational.hpp"
#include "rigid/super_space.hpp"

using rigid::algebra_action;
using rigid::compose;
using rigid::GradedMap;
using rigid::Rational;
using rigid::split_idempotent;
using rigid::SplitSummand;
using rigid::SuperSpace;

namespace {

void expect_valid_split(const SplitSummand& s, const GradedMap& e) {
  EXPECT_EQ(compose(s.project, s.embed), GradedMap::identity(s.summand));
  EXPECT_EQ(compose(s.embed, s.project), e);
}

TEST(Split, IdentityIdempotent) {
  const SuperSpace v = SuperSpace::mixed(2, 1);
  const GradedMap id = GradedMap::identity(v);
  const SplitSummand s = split_idempotent(id);
  EXPECT_EQ(s.summand, v);
  EXPECT_EQ(s.embed, id);
  EXPECT_EQ(s.project, id);
}

TEST(Split, ZeroIdempotent) {
  const SuperSpace v = SuperSpace::mixed(1, 2);
  const SplitSummand s = split_idempotent(GradedMap::zero(v, v));
  EXPECT_EQ(s.summand.dim(), 0u);
  expect_valid_split(s, GradedMap::zero(v, v));
}

TEST(Split, RejectsNonIdempotent) {
  const SuperSpace v = SuperSpace::even_space(2);
  std::vector<Rational> entries{2, 0, 0, 0};
  EXPECT_THROW(split_idempotent(GradedMap(v, v, entries)), std::invalid_argument);

  const SuperSpace w = SuperSpace::even_space(1);
  EXPECT_THROW(split_idempotent(GradedMap::zero(v, w)), std::invalid_argument);
}

TEST(Split, RankOneProjector) {
  // Projector onto the diagonal of a plane: entries 1/2 everywhere.
  const SuperSpace v = SuperSpace::even_space(2);
  const Rational h(1, 2);
  const GradedMap e(v, v, {h, h, h, h});
  const SplitSummand s = split_idempotent(e);
  EXPECT_EQ(s.summand.dim(), 1u);
  expect_valid_split(s, e);
}

TEST(Split, SkewSymmetrizerOnTripleTensor) {
  const SuperSpace v = SuperSpace::even_space(3);
  const GradedMap e = algebra_action(rigid::antisymmetrizer(3), v);
  const SplitSummand s = split_idempotent(e);
  EXPECT_EQ(s.summand.dim(), 1u);
  EXPECT_EQ(s.summand.parity(0), rigid::Parity::even);
  expect_valid_split(s, e);
}

TEST(Split, ParityOfSummandFollowsPivots) {
  // e_2 on an odd line: the square is one even basis vector and the
  // idempotent acts as the identity there.
  const SuperSpace o = SuperSpace::odd_space(1);
  const GradedMap e = algebra_action(rigid::antisymmetrizer(2), o);
  const SplitSummand s = split_idempotent(e);
  EXPECT_EQ(s.summand.dim(), 1u);
  EXPECT_EQ(s.summand.parity(0), rigid::Parity::even);
  expect_valid_split(s, e);
}

TEST(Split, MixedParityIdempotent) {
  // Block projector with one even and one odd direction kept.
  const SuperSpace v = SuperSpace::from_parity_string("eoeo");
  std::vector<Rational> entries(16);
  entries[0 * 4 + 0] = 1;
  entries[1 * 4 + 1] = 1;
  const GradedMap e(v, v, entries);
  const SplitSummand s = split_idempotent(e);
  EXPECT_EQ(s.summand.parity_string(), "eo");
  expect_valid_split(s, e);
}

TEST(Split, DeterministicBasis) {
  const SuperSpace v = SuperSpace::even_space(3);
  const GradedMap e = algebra_action(rigid::antisymmetrizer(2), v);
  const SplitSummand s1 = split_idempotent(e);
  const SplitSummand s2 = split_idempotent(e);
  EXPECT_EQ(s1.embed, s2.embed);
  EXPECT_EQ(s1.project, s2.project);
}

}  // namespace
