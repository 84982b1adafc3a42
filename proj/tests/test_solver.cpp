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
#include <vector>

#include "draftgame/engine.hpp"
#include "draftgame/oracle.hpp"
#include "draftgame/solver.hpp"

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

I64 example2() {
  I64 g(3);
  g.add_agent("X1", {5, 0, 0});
  g.add_agent("X2", {0, 5, 0});
  g.add_agent("X3", {0, 0, 5});
  g.add_agent("X4", {4, 4, 4});
  g.add_agent("X5", {0, 3, 3});
  g.add_agent("X6", {3, 0, 0});
  return g;
}

std::vector<SolveOptions> every_configuration() {
  std::vector<SolveOptions> out;
  for (int mask = 0; mask < 64; ++mask) {
    SolveOptions o;
    o.prune.dominating_agent = mask & 1;
    o.prune.dominating_pair = mask & 2;
    o.prune.two_task = mask & 4;
    o.prune.pareto = mask & 8;
    o.prune.bounds = mask & 16;
    o.alpha_beta = mask & 32;
    out.push_back(o);
  }
  return out;
}

TEST(Solver, Example1) {
  SolveOptions o;
  o.principal_variation = true;
  const auto r = solve(example1(), o);
  EXPECT_EQ(r.score, 3);
  EXPECT_EQ(r.best_move, 0u);
  EXPECT_EQ(r.pv, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Solver, Example1MoveValuesMatchOracle) {
  const P64 root(example1());
  const auto moves = evaluate_moves(root);
  ASSERT_EQ(moves.size(), 3u);
  const std::vector<std::int64_t> frozen{3, 2, 2};  // brute force
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(moves[i].agent, i);
    EXPECT_TRUE(moves[i].exact());
    EXPECT_EQ(moves[i].lower, frozen[i]);
  }
}

TEST(Solver, Example2OnlyOptimalFirstPick) {
  const auto r = solve(example2());
  EXPECT_EQ(r.score, 2);
  EXPECT_EQ(r.best_move, 3u);
  const std::vector<std::int64_t> frozen{1, 1, 1, 2, 1, -2};  // brute force
  const auto moves = evaluate_moves(P64(example2()));
  ASSERT_EQ(moves.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(moves[i].lower, frozen[i]) << i;
}

TEST(Solver, Example2PruningSavesNodes) {
  SolveOptions off;
  off.prune = PruneOptions::none();
  off.alpha_beta = false;
  const auto all = solve(example2());
  const auto none = solve(example2(), off);
  EXPECT_EQ(all.score, none.score);
  EXPECT_GE(none.stats.nodes, 5 * all.stats.nodes);
}

TEST(Solver, EveryRuleCombinationAgreesOnFixedCorpus) {
  std::vector<I64> corpus{example1(), example2()};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    corpus.push_back(oracle::random_instance(2 + seed % 7, 1 + seed % 3, 4, seed));
  }
  for (const auto& g : corpus) {
    const auto expected = oracle::brute_force_score(g);
    for (const auto& o : every_configuration()) {
      ASSERT_EQ(solve(g, o).score, expected);
    }
  }
}

TEST(Solver, MidGamePositionsAndBobToMove) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = oracle::random_instance(3 + seed % 6, 1 + seed % 3, 10, seed);
    P64 p(g);
    p.play(seed % g.size());
    EXPECT_EQ(solve(p).score, oracle::brute_force_value(p)) << seed;
    const P64 bob_first(g, Player::bob);
    EXPECT_EQ(solve(bob_first).score, oracle::brute_force_value(bob_first)) << seed;
  }
}

TEST(Solver, FrozenMixedInstance) {
  I64 g(3);
  g.add_agent("a0", {3, 2, 7});
  g.add_agent("a1", {2, 7, 3});
  g.add_agent("a2", {9, 7, 8});
  g.add_agent("a3", {0, 5, 6});
  g.add_agent("a4", {8, 1, 4});
  g.add_agent("a5", {6, 10, 5});
  g.add_agent("a6", {6, 3, 2});
  g.add_agent("a7", {7, 5, 9});
  EXPECT_EQ(solve(g).score, 3);  // brute force
}

TEST(Solver, OddSumOfCopies) {
  const auto three = oracle::copies(example1(), 3);
  EXPECT_EQ(solve(three).score, 3);  // brute force with a 6-task guard
}

TEST(Solver, BudgetReportsBracketingBounds) {
  const auto g = oracle::random_instance(14, 3, 1000, 5);
  const auto exact = solve(g).score;
  SolveOptions o;
  o.node_budget = 10;
  try {
    solve(g, o);
    FAIL() << "budget did not fire";
  } catch (const BudgetExceededWithBounds<std::int64_t>& e) {
    EXPECT_LE(e.lower(), exact);
    EXPECT_GE(e.upper(), exact);
    EXPECT_GE(e.nodes(), 10u);
  }
  for (const auto& m : evaluate_moves(P64(g), o)) {
    const auto v = solve(P64(g).after(m.agent)).score;
    EXPECT_LE(m.lower, v);
    EXPECT_GE(m.upper, v);
  }
}

TEST(Solver, RefusesMoreThan64Agents) {
  I64 g(1);
  for (int i = 0; i < 65; ++i) g.add_agent("a" + std::to_string(i), {1});
  EXPECT_THROW(solve(g), PreconditionError);
}

TEST(Solver, LargeInstanceWithManyTwins) {
  // 40 agents in four identical groups: canonicalization keeps this small.
  I64 g(3);
  for (int i = 0; i < 10; ++i) {
    g.add_agent("a" + std::to_string(i), {6, 1, 0});
    g.add_agent("b" + std::to_string(i), {1, 6, 0});
    g.add_agent("c" + std::to_string(i), {0, 1, 6});
    g.add_agent("d" + std::to_string(i), {2, 2, 2});
  }
  EXPECT_EQ(solve(g).score, 0);  // even copies of each agent: pairing gives 0
}

TEST(PruningRules, DominatingAgentIsAnOptimalPick) {
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const auto g = oracle::random_instance(2 + seed % 7, 1 + seed % 3, 10, seed);
    const P64 root(g);
    const auto value = oracle::brute_force_value(root);
    for (auto x : dominating_agents(root)) {
      ++seen;
      EXPECT_EQ(oracle::brute_force_value(root.after(x)), value) << seed;
    }
  }
  EXPECT_GT(seen, 50);
}

TEST(PruningRules, DominatingPairContainsAnOptimalPick) {
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto g = oracle::random_instance(2 + seed % 7, 1 + seed % 3, 5, seed);
    const P64 root(g);
    if (auto pair = find_dominating_pair(root)) {
      ++seen;
      EXPECT_TRUE(is_dominating_pair(root, pair->first, pair->second));
      const auto value = oracle::brute_force_value(root);
      const auto best = std::max(oracle::brute_force_value(root.after(pair->first)),
                                 oracle::brute_force_value(root.after(pair->second)));
      EXPECT_EQ(best, value) << seed;
    }
  }
  EXPECT_GT(seen, 5);
}

TEST(PruningRules, ParetoCandidatesContainAnOptimalPick) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = oracle::random_instance(2 + seed % 7, 1 + seed % 3, 4, seed);
    const P64 root(g);
    const auto value = oracle::brute_force_value(root);
    bool found = false;
    for (auto x : pareto_candidates(root)) {
      found = found || oracle::brute_force_value(root.after(x)) == value;
    }
    EXPECT_TRUE(found) << seed;
  }
}

TEST(PruningRules, TwoTaskCandidatesContainAnOptimalPick) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = oracle::random_instance(2 + seed % 8, 2, 10, seed);
    const P64 root(g);
    const auto value = oracle::brute_force_value(root);
    const auto cands = two_task_candidates(root);
    EXPECT_LE(cands.size(), 2u);
    bool found = false;
    for (auto x : cands) {
      found = found || oracle::brute_force_value(root.after(x)) == value;
    }
    EXPECT_TRUE(found) << seed;
  }
  EXPECT_THROW(two_task_candidates(P64(example2())), PreconditionError);
}

TEST(Engine, DispatchesToTheCheapestMethod) {
  I64 otp(2);
  otp.add_agent("x1", {5, 0});
  otp.add_agent("x2", {3, 0});
  otp.add_agent("y1", {0, 4});
  otp.add_agent("y2", {0, 2});
  auto a = analyze(P64(otp));
  EXPECT_EQ(a.method, Method::otp_two_task);
  EXPECT_EQ(a.score, 1);

  I64 otp3(3);
  otp3.add_agent("x", {5, 0, 0});
  otp3.add_agent("y", {0, 4, 0});
  otp3.add_agent("z", {0, 0, 2});
  EXPECT_EQ(analyze(P64(otp3)).method, Method::otp_xp);
  EXPECT_EQ(analyze(P64(example1())).method, Method::search);
  // Mid-game positions go to the search.
  EXPECT_EQ(analyze(P64(otp).after(0)).method, Method::search);
  EngineOptions forced;
  forced.method = Method::otp_xp;
  EXPECT_THROW(analyze(P64(otp).after(0), forced), PreconditionError);
  EXPECT_THROW(analyze(P64(example1()), forced), PreconditionError);
}

TEST(Engine, BigIntegersFallBack) {
  Instance g(2);
  const Integer huge = Integer(1) << 80;
  g.add_agent("p", {4 * huge, 7 * huge});
  g.add_agent("q", {5 * huge, 5 * huge});
  g.add_agent("r", {Integer(0), 4 * huge});
  EXPECT_FALSE(fits_machine_integers(g));
  const auto r = with_best_integers(Position(g), [](const auto& p) {
    return widen(analyze(p));
  });
  EXPECT_EQ(r.score, 3 * huge);
  EXPECT_TRUE(fits_machine_integers(instance_cast<Integer>(example1())));
}

}  // namespace
}  // namespace draft
