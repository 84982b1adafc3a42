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

// From QBF games to draft games.
//
// Formulas are exists x1 forall y1 ... exists xn forall yn over a CNF matrix
// with clauses of at most three literals and every variable occurring three
// times. Variables are numbered as in QDIMACS: x_i is 2i-1, y_i is 2i, and a
// literal is a signed variable number.
//
// build_draft_instance() turns a normalized formula into a draft instance
// and a threshold s such that Alice reaches s exactly when the existential
// player wins. Every efficiency is a power of five (or a 1 in a clause
// column) so that, ply after ply, the best free agent outweighs twice the
// sum of everything left; optimal play then follows a fixed order in which
// only the choice inside each pair of twins is free.

#ifndef DRAFTGAME_REDUCTION_HPP_
#define DRAFTGAME_REDUCTION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "draftgame/core.hpp"
#include "draftgame/solver.hpp"

namespace draft {

using Clause = std::vector<int>;

struct QbfFormula {
  std::size_t n = 0;  // number of (exists x_i, forall y_i) blocks
  std::vector<Clause> clauses;

  std::size_t variables() const { return 2 * n; }
  std::size_t m() const { return clauses.size(); }
  friend bool operator==(const QbfFormula&, const QbfFormula&) = default;
};

inline bool is_existential(int var) { return var % 2 == 1; }

inline std::string variable_name(int var) {
  const int block = (var + 1) / 2;
  return (is_existential(var) ? "x" : "y") + std::to_string(block);
}

struct Occurrences {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t total() const { return positive + negative; }
};

inline std::vector<Occurrences> occurrences(const QbfFormula& f) {
  std::vector<Occurrences> occ(f.variables() + 1);
  for (const auto& c : f.clauses) {
    for (int lit : c) {
      auto& o = occ[static_cast<std::size_t>(std::abs(lit))];
      (lit > 0 ? o.positive : o.negative) += 1;
    }
  }
  return occ;
}

// Structural checks shared by every entry point: literals in range, clause
// sizes in [0, 3] (empty clauses only arise from simplification) and no
// literal repeated inside a clause. Complementary literals are allowed.
inline void validate_matrix(const QbfFormula& f) {
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    const std::string where = "clause " + std::to_string(j + 1);
    if (c.size() > 3) throw PreconditionError(where + " has more than 3 literals");
    for (std::size_t a = 0; a < c.size(); ++a) {
      const int v = std::abs(c[a]);
      if (c[a] == 0 || static_cast<std::size_t>(v) > f.variables()) {
        throw PreconditionError(where + ": literal " + std::to_string(c[a]) +
                                " out of range");
      }
      for (std::size_t b = 0; b < a; ++b) {
        if (c[a] == c[b]) {
          throw PreconditionError(where + " repeats literal " +
                                  std::to_string(c[a]));
        }
      }
    }
  }
}

// The input restriction of the source problem: clauses of size 1..3 and
// every variable occurring exactly three times.
inline void validate_three_occurrences(const QbfFormula& f) {
  validate_matrix(f);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    if (f.clauses[j].empty()) {
      throw PreconditionError("clause " + std::to_string(j + 1) + " is empty");
    }
  }
  const auto occ = occurrences(f);
  for (int v = 1; v <= static_cast<int>(f.variables()); ++v) {
    if (occ[v].total() != 3) {
      throw PreconditionError("variable " + variable_name(v) + " occurs " +
                              std::to_string(occ[v].total()) +
                              " times, expected 3");
    }
  }
}

// Shape accepted by the gadget builder: per variable at most two positive
// and one negative occurrence, and no variable occurring with one polarity
// only. Variables may vanish entirely and clauses may be empty; both come
// out of pure-literal elimination.
inline bool is_normalized(const QbfFormula& f) {
  try {
    validate_matrix(f);
  } catch (const PreconditionError&) {
    return false;
  }
  const auto occ = occurrences(f);
  for (std::size_t v = 1; v <= f.variables(); ++v) {
    if (occ[v].positive > 2 || occ[v].negative > 1) return false;
    if ((occ[v].positive == 0) != (occ[v].negative == 0)) return false;
  }
  return true;
}

// Pure-literal elimination to a fixpoint (an existential pure literal is
// made true and its clauses dropped; a universal one is made false and
// removed from its clauses), then polarity flips so that each surviving
// variable occurs at most twice positively and once negatively. The winner
// of the game is unchanged.
inline QbfFormula normalize_qbf(const QbfFormula& input) {
  validate_three_occurrences(input);
  QbfFormula f = input;
  for (bool changed = true; changed;) {
    changed = false;
    const auto occ = occurrences(f);
    for (int v = 1; v <= static_cast<int>(f.variables()); ++v) {
      const bool pure_pos = occ[v].positive > 0 && occ[v].negative == 0;
      const bool pure_neg = occ[v].negative > 0 && occ[v].positive == 0;
      if (!pure_pos && !pure_neg) continue;
      const int lit = pure_pos ? v : -v;
      if (is_existential(v)) {
        std::erase_if(f.clauses, [&](const Clause& c) {
          return std::find(c.begin(), c.end(), lit) != c.end();
        });
      } else {
        for (auto& c : f.clauses) std::erase(c, lit);
      }
      changed = true;
      break;  // occurrence counts are stale now
    }
  }
  const auto occ = occurrences(f);
  for (int v = 1; v <= static_cast<int>(f.variables()); ++v) {
    if (occ[v].negative <= occ[v].positive) continue;
    for (auto& c : f.clauses) {
      for (int& lit : c) {
        if (std::abs(lit) == v) lit = -lit;
      }
    }
  }
  return f;
}

enum class QbfPlayer { satisfier, falsifier };

inline std::string_view to_string(QbfPlayer p) {
  return p == QbfPlayer::satisfier ? "satisfier" : "falsifier";
}

struct QbfGuard {
  std::size_t max_n = 6;
};

// Exhaustive QBF game: variables are set in order x1, y1, ..., xn, yn, the
// satisfier choosing the x's.
inline QbfPlayer qbf_game_winner(const QbfFormula& f, QbfGuard guard = {}) {
  validate_matrix(f);
  if (f.n > guard.max_n) {
    throw GuardError("QBF referee limited to n <= " +
                     std::to_string(guard.max_n));
  }
  std::vector<char> value(f.variables() + 1, 0);
  auto satisfied = [&] {
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
      return std::any_of(c.begin(), c.end(), [&](int lit) {
        return (value[std::abs(lit)] != 0) == (lit > 0);
      });
    });
  };
  auto wins = [&](auto&& self, std::size_t var) -> bool {
    if (var > f.variables()) return satisfied();
    bool any = false, all = true;
    for (char b : {0, 1}) {
      value[var] = b;
      const bool w = self(self, var + 1);
      any = any || w;
      all = all && w;
    }
    return is_existential(static_cast<int>(var)) ? any : all;
  };
  return wins(wins, 1) ? QbfPlayer::satisfier : QbfPlayer::falsifier;
}

// QDIMACS subset: "p cnf V C" with V even, then one quantifier line per
// variable in order ("e 1 0", "a 2 0", ...), then C zero-terminated clauses.
// Lines starting with 'c' are comments.
inline QbfFormula parse_qdimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> vars, count;
  std::size_t next_quantified = 1;
  QbfFormula f;
  Clause current;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(lineno), msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == 'c') continue;
    if (head == "p") {
      std::string fmt;
      long long v = -1, c = -1;
      if (vars || !(ls >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0) {
        throw fail("expected a single header 'p cnf <vars> <clauses>'");
      }
      if (v % 2 != 0) {
        throw fail("variable count must be even (x_i, y_i blocks)");
      }
      vars = static_cast<std::size_t>(v);
      count = static_cast<std::size_t>(c);
      f.n = *vars / 2;
      continue;
    }
    if (!vars) throw fail("missing 'p cnf' header");
    if (head == "e" || head == "a") {
      if (!current.empty() || !f.clauses.empty()) {
        throw fail("quantifier line after clauses");
      }
      long long v = 0, zero = -1;
      if (!(ls >> v >> zero) || zero != 0) {
        throw fail("expected '" + head + " <var> 0' with a single variable");
      }
      if (static_cast<std::size_t>(v) != next_quantified) {
        throw fail("quantifiers must list variables 1.." +
                   std::to_string(*vars) + " in order");
      }
      if ((head == "e") != is_existential(static_cast<int>(v))) {
        throw fail("variable " + std::to_string(v) + " must be " +
                   (is_existential(static_cast<int>(v)) ? "existential"
                                                        : "universal"));
      }
      ++next_quantified;
      continue;
    }
    if (next_quantified != *vars + 1) {
      throw fail("prefix must quantify all " + std::to_string(*vars) +
                 " variables, alternating e/a");
    }
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw fail("bad literal '" + tok + "'");
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (static_cast<std::size_t>(std::labs(lit)) > *vars) {
          throw fail("literal " + tok + " out of range");
        }
        current.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!vars) throw ParseError("line " + std::to_string(lineno), "empty input");
  if (!current.empty()) {
    throw ParseError("line " + std::to_string(lineno), "unterminated clause");
  }
  if (next_quantified != *vars + 1) {
    throw ParseError("line " + std::to_string(lineno), "incomplete prefix");
  }
  if (f.clauses.size() != *count) {
    throw ParseError("line " + std::to_string(lineno),
                     "header announces " + std::to_string(*count) +
                         " clauses, found " + std::to_string(f.clauses.size()));
  }
  try {
    validate_matrix(f);
  } catch (const PreconditionError& e) {
    throw ParseError("", e.what());
  }
  return f;
}

inline std::string to_qdimacs(const QbfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variables() << ' ' << f.m() << '\n';
  for (std::size_t v = 1; v <= f.variables(); ++v) {
    out << (is_existential(static_cast<int>(v)) ? "e " : "a ") << v << " 0\n";
  }
  for (const auto& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

// All formulas with `n` blocks and at most `max_m` clauses in which every
// variable occurs exactly three times, one per clause multiset. Clauses are
// sorted sets of literals and the clause list is sorted, so the result is
// free of permutation duplicates.
inline std::vector<QbfFormula> enumerate_corpus(std::size_t n = 1,
                                                std::size_t max_m = 3) {
  const int vars = static_cast<int>(2 * n);
  std::vector<int> literals;
  for (int v = 1; v <= vars; ++v) {
    literals.push_back(-v);
    literals.push_back(v);
  }
  std::sort(literals.begin(), literals.end());
  std::vector<Clause> pool;
  const std::size_t L = literals.size();
  for (std::size_t a = 0; a < L; ++a) {
    pool.push_back({literals[a]});
    for (std::size_t b = a + 1; b < L; ++b) {
      pool.push_back({literals[a], literals[b]});
      for (std::size_t c = b + 1; c < L; ++c) {
        pool.push_back({literals[a], literals[b], literals[c]});
      }
    }
  }
  std::sort(pool.begin(), pool.end());
  std::vector<QbfFormula> out;
  std::vector<std::size_t> pick;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    QbfFormula f{n, {}};
    for (auto i : pick) f.clauses.push_back(pool[i]);
    const auto occ = occurrences(f);
    bool exact = true;
    for (int v = 1; v <= vars; ++v) {
      if (occ[v].total() > 3) return;
      exact = exact && occ[v].total() == 3;
    }
    if (exact && !pick.empty()) {
      out.push_back(std::move(f));
      return;
    }
    if (pick.size() == max_m) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      pick.push_back(i);
      self(self, i);  // multisets: clauses may repeat
      pick.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

// Which clauses host the occurrences of one variable: j and k the positive
// ones in clause order, l the negative one.
struct ClauseRoles {
  std::optional<std::size_t> j, k, l;
};

struct GadgetInstance {
  Instance instance;  // threshold set to s
  Integer threshold;
  std::vector<std::string> task_names;
  std::vector<std::string> agent_names;  // equal to the agent ids
  std::map<std::string, Integer> efficiency_table;
  std::vector<ClauseRoles> x_roles, y_roles;  // per block i (0-based)
  std::size_t n = 0, m = 0;

  std::size_t task(const std::string& name) const {
    auto it = std::find(task_names.begin(), task_names.end(), name);
    if (it == task_names.end()) throw PreconditionError("no task " + name);
    return static_cast<std::size_t>(it - task_names.begin());
  }
  std::size_t agent(const std::string& name) const {
    auto idx = instance.index_of(name);
    if (!idx) throw PreconditionError("no agent " + name);
    return *idx;
  }
};

namespace detail {

inline ClauseRoles roles_of(const QbfFormula& f, int var) {
  ClauseRoles r;
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    for (int lit : f.clauses[c]) {
      if (lit == var) (r.j ? r.k : r.j) = c;
      if (lit == -var) r.l = c;
    }
  }
  return r;
}

}  // namespace detail

// Agent and task names: tasks A, B, S1..Sm, then per block i
// U{i} ~U{i} V{i} ~V{i} W{i} ~W{i}; agents A1, B1, G{j}, G{j}', then per
// block X{i} ~X{i} X{i}.1 ~X{i}.1 X{i}.2 ~X{i}.2 TA{i}, Y{i} ~Y{i} Y'{i}
// ~Y'{i} TB{i} Y{i}.1 ~Y{i}.1 Y{i}.2 ~Y{i}.2.
inline GadgetInstance build_draft_instance(const QbfFormula& f) {
  if (!is_normalized(f)) {
    throw PreconditionError(
        "formula is not normalized (use normalize_qbf first)");
  }
  const std::size_t n = f.n, m = f.m();
  GadgetInstance out;
  out.n = n;
  out.m = m;

  // The chain alpha >> beta >> gamma_1 >> gamma'_1 >> ... >> a_1, then per
  // block a >> b >> c >> tA >> d >> e >> tB >> f >> g >> a_{i+1}, a_{n+1} = 1.
  const std::size_t top = 2 + 2 * m + 9 * n;
  std::vector<Integer> pow5(top + 1, Integer(1));
  for (std::size_t e = 1; e <= top; ++e) pow5[e] = pow5[e - 1] * 5;
  std::size_t exponent = top;
  auto next = [&](const std::string& symbol) {
    const Integer v = pow5[exponent--];
    out.efficiency_table[symbol] = v;
    return v;
  };

  auto& tasks = out.task_names;
  tasks = {"A", "B"};
  for (std::size_t j = 1; j <= m; ++j) tasks.push_back("S" + std::to_string(j));
  for (std::size_t i = 1; i <= n; ++i) {
    const auto s = std::to_string(i);
    for (const char* t : {"U", "~U", "V", "~V", "W", "~W"}) tasks.push_back(t + s);
  }
  Instance g(tasks.size());
  auto add = [&](const std::string& id,
                 std::initializer_list<std::pair<std::size_t, Integer>> entries) {
    std::vector<Integer> eff(tasks.size(), Integer(0));
    for (const auto& [k, v] : entries) eff[k] += v;
    g.add_agent(id, std::move(eff));
    out.agent_names.push_back(id);
  };
  const std::size_t A = 0, B = 1;
  auto S = [&](std::size_t clause) { return 2 + clause; };

  const Integer alpha = next("alpha"), beta = next("beta");
  add("A1", {{A, alpha}});
  add("B1", {{B, beta}});
  for (std::size_t j = 1; j <= m; ++j) {
    const auto s = std::to_string(j);
    const Integer gam = next("gamma_" + s), gam2 = next("gamma'_" + s);
    add("G" + s, {{A, gam}});
    add("G" + s + "'", {{B, gam2}, {S(j - 1), Integer(1)}});
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const auto s = std::to_string(i);
    const std::size_t U = 2 + m + 6 * (i - 1), nU = U + 1, V = U + 2,
                      nV = U + 3, W = U + 4, nW = U + 5;
    const ClauseRoles rx = detail::roles_of(f, static_cast<int>(2 * i - 1));
    const ClauseRoles ry = detail::roles_of(f, static_cast<int>(2 * i));
    out.x_roles.push_back(rx);
    out.y_roles.push_back(ry);
    // A clause role that does not exist contributes no 1-entry.
    auto one = [&](const std::optional<std::size_t>& c, std::size_t k,
                   const Integer& v) {
      std::vector<std::pair<std::size_t, Integer>> e{{k, v}};
      if (c) e.emplace_back(S(*c), Integer(1));
      return e;
    };
    auto add_entries = [&](const std::string& id,
                           const std::vector<std::pair<std::size_t, Integer>>& e) {
      std::vector<Integer> eff(tasks.size(), Integer(0));
      for (const auto& [k, v] : e) eff[k] += v;
      g.add_agent(id, std::move(eff));
      out.agent_names.push_back(id);
    };

    const Integer a = next("a_" + s), b = next("b_" + s), c = next("c_" + s),
                  tA = next("tA_" + s), d = next("d_" + s), e = next("e_" + s),
                  tB = next("tB_" + s), fi = next("f_" + s), gi = next("g_" + s);
    add("X" + s, {{U, a}});
    add("~X" + s, {{nU, a}});
    add_entries("X" + s + ".1", one(rx.j, U, b));
    add_entries("~X" + s + ".1", one(rx.l, nU, b));
    add_entries("X" + s + ".2", one(rx.k, U, c));
    add("~X" + s + ".2", {{nU, c}});
    add("TA" + s, {{A, tA}});
    add("Y" + s, {{V, d}});
    add("~Y" + s, {{nV, d}});
    add("Y'" + s, {{W, e}});
    add("~Y'" + s, {{nW, e}});
    add("TB" + s, {{B, tB}});
    add_entries("Y" + s + ".1", one(ry.j, V, fi));
    add_entries("~Y" + s + ".1", one(ry.l, nV, fi));
    add_entries("Y" + s + ".2", one(ry.k, W, gi));
    add_entries("~Y" + s + ".2", one(ry.l, nW, gi));
  }
  out.threshold = alpha - beta;
  g.set_threshold(out.threshold);
  out.instance = std::move(g);
  return out;
}

// One ply of the forced line.
struct PlyReport {
  std::string step;       // "A", "B", "C.2.1", "D.1.5", ...
  std::string expected;   // agent the line picks (or the pair, "X1|~X1")
  std::string picked;
  bool pair_step = false;
  bool ok = false;        // unique dominating agent / pair detected
  std::string detail;
};

struct ForcedOrderReport {
  std::vector<PlyReport> plies;
  bool setup_forced = true;  // every ply through the last C step
  bool pairs_detected = true;
  bool singles_forced = true;  // T^A / T^B and second members of pairs
  std::optional<std::string> first_failure;
  Integer final_score;  // score of the replayed line
  bool ok() const { return setup_forced && pairs_detected && singles_forced; }
};

// Replays the move order of the construction. At single steps the expected
// agent must be the only dominating agent; at the first ply of each twin
// step the twins must be detected as a dominating pair, and the second twin
// must then be the only dominating agent. `choices` selects, per twin step
// in order (7 per block), whether the mover takes the first-listed twin
// (true, the default) or the barred one.
inline ForcedOrderReport verify_forced_order(
    const GadgetInstance& gadget, const std::vector<bool>& choices = {}) {
  ForcedOrderReport report;
  Position pos(gadget.instance);
  std::size_t choice_index = 0;

  auto fail = [&](PlyReport& ply, const std::string& why) {
    ply.ok = false;
    ply.detail = why;
    if (!report.first_failure) report.first_failure = ply.step + ": " + why;
  };
  auto single = [&](const std::string& step, const std::string& name,
                    bool setup) {
    PlyReport ply{step, name, name, false, true, ""};
    const auto agent = gadget.agent(name);
    const auto dom = dominating_agents(pos);
    if (dom.size() != 1 || dom.front() != agent) {
      fail(ply, "expected " + name + " as the unique dominating agent, found " +
                    std::to_string(dom.size()) + " dominating agent(s)");
      (setup ? report.setup_forced : report.singles_forced) = false;
    }
    pos.play(agent);
    report.plies.push_back(std::move(ply));
  };
  auto twins = [&](const std::string& step, const std::string& first,
                   const std::string& second) {
    const auto x = gadget.agent(first), y = gadget.agent(second);
    const bool take_first =
        choice_index < choices.size() ? choices[choice_index] : true;
    ++choice_index;
    PlyReport ply{step + ".a", first + "|" + second,
                  take_first ? first : second, true, true, ""};
    const auto pair = find_dominating_pair(pos);
    const bool found =
        pair && ((pair->first == x && pair->second == y) ||
                 (pair->first == y && pair->second == x));
    if (!found) {
      fail(ply, "pair " + first + "|" + second + " not detected");
      report.pairs_detected = false;
    }
    pos.play(take_first ? x : y);
    report.plies.push_back(std::move(ply));
    const std::string other = take_first ? second : first;
    single(step + ".b", other, false);
  };

  single("A", "A1", true);
  single("B", "B1", true);
  for (std::size_t j = 1; j <= gadget.m; ++j) {
    const auto s = std::to_string(j);
    single("C." + s + ".1", "G" + s, true);
    single("C." + s + ".2", "G" + s + "'", true);
  }
  for (std::size_t i = 1; i <= gadget.n; ++i) {
    const auto s = std::to_string(i);
    const std::string D = "D." + s + ".";
    twins(D + "1-2", "X" + s, "~X" + s);
    twins(D + "3-4", "X" + s + ".1", "~X" + s + ".1");
    twins(D + "5-6", "X" + s + ".2", "~X" + s + ".2");
    single(D + "7", "TA" + s, false);
    twins(D + "8-9", "Y" + s, "~Y" + s);
    twins(D + "10-11", "Y'" + s, "~Y'" + s);
    single(D + "12", "TB" + s, false);
    twins(D + "13-14", "Y" + s + ".1", "~Y" + s + ".1");
    twins(D + "15-16", "Y" + s + ".2", "~Y" + s + ".2");
  }
  report.final_score = final_score(pos);
  return report;
}

}  // namespace draft

#endif  // DRAFTGAME_REDUCTION_HPP_
