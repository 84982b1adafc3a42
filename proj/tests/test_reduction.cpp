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
#include <set>
#include <string>

#include "draftgame/reduction.hpp"
#include "draftgame/solver.hpp"

namespace draft {
namespace {

Integer pow5(unsigned e) {
  Integer r = 1;
  while (e--) r *= 5;
  return r;
}

// E x1 A y1: (x1 | y1) & (x1 | ~y1) & (~x1 | y1)
QbfFormula three_clause() { return {1, {{1, 2}, {1, -2}, {-1, 2}}}; }

TEST(Qbf, Winners) {
  EXPECT_EQ(qbf_game_winner(three_clause()), QbfPlayer::falsifier);
  // Tautological third clause.
  EXPECT_EQ(qbf_game_winner({1, {{1}, {1, 2}, {-1, 2, -2}}}), QbfPlayer::satisfier);
  EXPECT_EQ(qbf_game_winner({1, {{1, 2}, {}}}), QbfPlayer::falsifier);
  EXPECT_EQ(qbf_game_winner({0, {}}), QbfPlayer::satisfier);
  EXPECT_EQ(qbf_game_winner({1, {{1, 2}, {1, -2}}}), QbfPlayer::satisfier);
  EXPECT_EQ(qbf_game_winner({1, {{1, 2}, {-1, -2}}}), QbfPlayer::falsifier);
  EXPECT_THROW(qbf_game_winner({7, {}}), GuardError);
  EXPECT_EQ(qbf_game_winner({7, {}}, QbfGuard{7}), QbfPlayer::satisfier);
}

TEST(Qbf, Validation) {
  EXPECT_THROW(validate_matrix({1, {{1, 1}}}), PreconditionError);
  EXPECT_THROW(validate_matrix({1, {{1, 2, -1, -2}}}), PreconditionError);
  EXPECT_THROW(validate_matrix({1, {{3}}}), PreconditionError);
  EXPECT_NO_THROW(validate_three_occurrences(three_clause()));
  EXPECT_THROW(validate_three_occurrences({1, {{1, 2}, {1, 2}}}), PreconditionError);
}

TEST(Qbf, Normalization) {
  EXPECT_TRUE(is_normalized(three_clause()));
  EXPECT_EQ(normalize_qbf(three_clause()), three_clause());
  // x1 once positive, twice negative: flipped.
  const QbfFormula flipped = normalize_qbf({1, {{-1, 2}, {-1, -2}, {1, 2}}});
  EXPECT_EQ(flipped, (QbfFormula{1, {{1, 2}, {1, -2}, {-1, 2}}}));
  // x1 pure positive under the existential: set true, its clauses vanish;
  const QbfFormula pure = normalize_qbf({1, {{1, 2}, {1, -2}, {1, 2}}});
  EXPECT_TRUE(pure.clauses.empty());
  EXPECT_THROW(normalize_qbf({1, {{1, 2}}}), PreconditionError);
}

TEST(Qbf, NormalizationPreservesTheWinnerOnTheCorpus) {
  const auto corpus = enumerate_corpus(1, 3);
  EXPECT_EQ(corpus.size(), 68u);
  std::set<std::string> distinct;
  for (const auto& f : corpus) {
    EXPECT_NO_THROW(validate_three_occurrences(f));
    const auto nf = normalize_qbf(f);
    EXPECT_TRUE(is_normalized(nf));
    EXPECT_EQ(qbf_game_winner(nf), qbf_game_winner(f)) << to_qdimacs(f);
    distinct.insert(to_qdimacs(f));
  }
  EXPECT_EQ(distinct.size(), corpus.size());
}

TEST(Qdimacs, ParseAndPrint) {
  const std::string text =
      "c comment\np cnf 2 3\ne 1 0\na 2 0\n1 2 0\n1 -2 0\n-1 2 0\n";
  const auto f = parse_qdimacs(text);
  EXPECT_EQ(f, three_clause());
  EXPECT_EQ(parse_qdimacs(to_qdimacs(f)), f);
}

std::string qdimacs_error(const std::string& text) {
  try {
    parse_qdimacs(text);
  } catch (const ParseError& e) {
    return e.location();
  }
  return "<no error>";
}

TEST(Qdimacs, ErrorsNameTheLine) {
  EXPECT_EQ(qdimacs_error("p cnf 3 0\n"), "line 1");
  EXPECT_EQ(qdimacs_error("p cnf 2 1\na 1 0\n"), "line 2");
  EXPECT_EQ(qdimacs_error("p cnf 2 1\ne 1 0\na 2 0\n1 x 0\n"), "line 4");
  EXPECT_EQ(qdimacs_error("p cnf 2 1\ne 1 0\na 2 0\n1 5 0\n"), "line 4");
  EXPECT_EQ(qdimacs_error("p cnf 2 2\ne 1 0\na 2 0\n1 0\n"), "line 4");
  EXPECT_EQ(qdimacs_error("p cnf 2 1\ne 1 0\na 2 0\n1 2\n"), "line 4");
  EXPECT_EQ(qdimacs_error("1 2 0\n"), "line 1");
}

TEST(Gadget, CountsAndChainForTheThreeClauseFormula) {
  const auto gadget = build_draft_instance(three_clause());
  EXPECT_EQ(gadget.instance.size(), 24u);
  EXPECT_EQ(gadget.instance.tasks(), 11u);
  EXPECT_EQ(gadget.efficiency_table.at("alpha"), pow5(17));
  EXPECT_EQ(gadget.threshold, pow5(17) - pow5(16));
  EXPECT_EQ(gadget.instance.threshold(), gadget.threshold);
  // Every realized value is a power of five, all distinct.
  std::set<Integer> values;
  for (const auto& [symbol, v] : gadget.efficiency_table) {
    Integer x = v;
    while (x % 5 == 0) x /= 5;
    EXPECT_EQ(x, 1) << symbol;
    values.insert(v);
  }
  EXPECT_EQ(values.size(), gadget.efficiency_table.size());
}

TEST(Gadget, StructuralInvariantsOverTheCorpus) {
  for (const auto& f : enumerate_corpus(1, 3)) {
    const auto nf = normalize_qbf(f);
    const auto gadget = build_draft_instance(nf);
    const auto& g = gadget.instance;
    EXPECT_EQ(g.size(), 2 * nf.m() + 2 + 16 * nf.n);
    EXPECT_EQ(g.tasks(), nf.m() + 2 + 6 * nf.n);
    for (std::size_t i = 0; i < g.size(); ++i) {
      int nonzero = 0;
      for (std::size_t k = 0; k < g.tasks(); ++k) {
        if (g.eff(i, k) == 0) continue;
        ++nonzero;
        if (gadget.task_names[k][0] == 'S') EXPECT_EQ(g.eff(i, k), 1);
      }
      EXPECT_LE(nonzero, 2) << g.agent(i).id;
    }
  }
}

TEST(Gadget, DegenerateFormula) {
  // Empty prefix and matrix: setup agents only. The chain gives alpha = 25,
  // beta = 5 with its two fixed steps above the final 1.
  const auto gadget = build_draft_instance({0, {}});
  EXPECT_EQ(gadget.instance.size(), 2u);
  EXPECT_EQ(gadget.instance.tasks(), 2u);
  EXPECT_EQ(gadget.efficiency_table.at("alpha"), 25);
  EXPECT_EQ(gadget.efficiency_table.at("beta"), 5);
  EXPECT_EQ(solve(gadget.instance).score, gadget.threshold);
  const auto report = verify_forced_order(gadget);
  EXPECT_TRUE(report.ok());
}

TEST(Gadget, RejectsUnnormalizedInput) {
  EXPECT_THROW(build_draft_instance({1, {{-1, 2}, {-1, -2}, {1, 2}}}),
               PreconditionError);
}

TEST(Gadget, ForcedOrderOnTheThreeClauseFormula) {
  const auto gadget = build_draft_instance(three_clause());
  const auto report = verify_forced_order(gadget);
  EXPECT_TRUE(report.setup_forced);
  EXPECT_TRUE(report.pairs_detected);
  EXPECT_TRUE(report.singles_forced);
  EXPECT_FALSE(report.first_failure);
  ASSERT_GE(report.plies.size(), 6u);
  EXPECT_EQ(report.plies[0].step, "A");
  EXPECT_EQ(report.plies[1].step, "B");
  bool saw_pair = false;
  for (const auto& ply : report.plies) {
    if (ply.step == "D.1.1-2.a") {
      saw_pair = true;
      EXPECT_TRUE(ply.pair_step);
      EXPECT_EQ(ply.expected, "X1|~X1");
    }
  }
  EXPECT_TRUE(saw_pair);
}

TEST(Gadget, EquivalenceOnTheCorpus) {
  int satisfier = 0;
  for (const auto& f : enumerate_corpus(1, 3)) {
    const auto nf = normalize_qbf(f);
    const auto gadget = build_draft_instance(nf);
    const auto score = solve(instance_cast<std::int64_t>(gadget.instance)).score;
    const bool wins = qbf_game_winner(nf) == QbfPlayer::satisfier;
    satisfier += wins;
    EXPECT_EQ(Integer(score) >= gadget.threshold, wins) << to_qdimacs(f);
  }
  EXPECT_EQ(satisfier, 28);
}

}  // namespace
}  // namespace draft
