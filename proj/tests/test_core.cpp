// Copyright 2026 The draftgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <vector>

#include "draftgame/core.hpp"
#include "draftgame/matching.hpp"

namespace draft {
namespace {

using I64 = BasicInstance<std::int64_t>;
using P64 = BasicPosition<std::int64_t>;

I64 example1() {
  I64 g(2);
  g.add_agent("p", {4, 7});
  g.add_agent("q", {5, 5});
  g.add_agent("r", {0, 4});
  return g;
}

TEST(Instance, RejectsMalformedAgents) {
  I64 g(2);
  EXPECT_THROW(g.add_agent("a", {1}), PreconditionError);
  EXPECT_THROW(g.add_agent("a", {1, -1}), PreconditionError);
  EXPECT_THROW(g.add_agent("", {1, 1}), PreconditionError);
  g.add_agent("a", {1, 1});
  EXPECT_THROW(g.add_agent("a", {2, 2}), PreconditionError);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.index_of("a"), 0u);
  EXPECT_FALSE(g.index_of("b"));
}

TEST(Instance, UpperBoundIsMaxNorm) {
  EXPECT_EQ(score_upper_bound(example1()), 7);
  EXPECT_EQ(score_upper_bound(I64(3)), 0);
}

TEST(Instance, CastIsLossless) {
  Instance big(1);
  big.add_agent("x", {Integer(1) << 70});
  EXPECT_THROW(instance_cast<std::int64_t>(big), PreconditionError);
  const auto back = instance_cast<Integer>(example1());
  EXPECT_EQ(instance_cast<std::int64_t>(back), example1());
}

TEST(Position, AlternatesAndTracksOwners) {
  P64 p(example1());
  EXPECT_EQ(p.to_move(), Player::alice);
  p.play(0);
  EXPECT_EQ(p.to_move(), Player::bob);
  EXPECT_EQ(p.owner(0), Owner::alice);
  EXPECT_THROW(p.play(0), PreconditionError);
  EXPECT_THROW(p.play(7), std::exception);
  const P64 q = p.after(1);
  EXPECT_EQ(p.num_free(), 2u);  // after() leaves the original alone
  EXPECT_EQ(q.owner(1), Owner::bob);
  EXPECT_EQ(q.free_agents(), std::vector<std::size_t>{2});
}

TEST(Position, FromPicksValidatesTurnCounts) {
  const auto p = P64::from_picks(example1(), {0}, {}, Player::bob);
  EXPECT_EQ(p.picked(Player::alice), std::vector<std::size_t>{0});
  EXPECT_EQ(p.to_move(), Player::bob);
  EXPECT_THROW(P64::from_picks(example1(), {0}, {0}, Player::alice),
               PreconditionError);
  EXPECT_THROW(P64::from_picks(example1(), {0, 1}, {}, Player::bob),
               PreconditionError);
}

TEST(Matching, FrozenAssignmentValue) {
  I64 g(3);
  g.add_agent("a", {4, 4, 4});
  g.add_agent("b", {0, 3, 3});
  g.add_agent("c", {3, 0, 0});
  const std::vector<std::size_t> all{0, 1, 2};
  EXPECT_EQ(assignment_value(g, all), 10);
  const auto match = optimal_assignment(g, all);
  ASSERT_EQ(match.size(), 3u);
  EXPECT_EQ(match[0], 2u);
  std::int64_t total = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    if (match[k]) total += g.eff(*match[k], k);
  }
  EXPECT_EQ(total, 10);
}

TEST(Matching, MoreTasksThanAgentsAndViceVersa) {
  I64 g(3);
  g.add_agent("a", {1, 9, 2});
  const std::vector<std::size_t> one{0};
  EXPECT_EQ(assignment_value(g, one), 9);
  I64 h(1);
  h.add_agent("a", {3});
  h.add_agent("b", {8});
  h.add_agent("c", {5});
  const std::vector<std::size_t> all{0, 1, 2};
  EXPECT_EQ(assignment_value(h, all), 8);
  EXPECT_EQ(assignment_value(h, std::vector<std::size_t>{}), 0);
}

TEST(Matching, Example1OptimalLine) {
  P64 p(example1());
  p.play(0);  // (4,7)
  p.play(1);  // (5,5)
  p.play(2);  // (0,4)
  EXPECT_EQ(provisional_value(p, Player::alice), 8);
  EXPECT_EQ(provisional_value(p, Player::bob), 5);
  EXPECT_EQ(final_score(p), 3);
}

TEST(Matching, BigIntegersAgreeWithMachineIntegers) {
  Instance g(2);
  const Integer huge = Integer(1) << 90;
  g.add_agent("a", {huge, Integer(1)});
  g.add_agent("b", {huge - 1, huge});
  const std::vector<std::size_t> all{0, 1};
  EXPECT_EQ(assignment_value(g, all), huge + huge);
}

}  // namespace
}  // namespace draft
