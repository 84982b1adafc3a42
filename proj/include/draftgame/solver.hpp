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

// Exact minimax for the draft game.
//
// The search is alpha-beta over pick sequences with a transposition table
// keyed on (Alice's set, Bob's set, player to move), where agents with equal
// efficiency vectors are interchangeable and canonicalized away. At every
// node the move list is narrowed by the first applicable value-preserving
// rule:
//
//   1. a dominating agent: its edge on some task is at least twice the total
//      potential of all other free agents, so picking it is optimal;
//   2. a dominating pair {X, Y}: whichever of the two is taken, the other
//      becomes a dominating agent, so one of X, Y is an optimal pick;
//   3. with two tasks: some agent that maximizes one task is optimal;
//   4. otherwise: Pareto-maximal agents only (a componentwise-dominated agent
//      is never a strictly better pick).
//
// Before expanding a node the search also checks monotone bounds: the value
// lies between "every free agent goes to Bob" and "every free agent goes to
// Alice", and a node whose bounds already decide the current window is cut.
//
// Each rule can be switched off independently; the game value does not
// depend on which are on, only the node count does.

#ifndef DRAFTGAME_SOLVER_HPP_
#define DRAFTGAME_SOLVER_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "draftgame/core.hpp"
#include "draftgame/matching.hpp"

namespace draft {

inline constexpr std::size_t kMaxSearchAgents = 64;

struct PruneOptions {
  bool dominating_agent = true;
  bool dominating_pair = true;
  bool two_task = true;
  bool pareto = true;
  bool bounds = true;

  static PruneOptions none() { return {false, false, false, false, false}; }
  bool any() const {
    return dominating_agent || dominating_pair || two_task || pareto || bounds;
  }
};

struct SolveOptions {
  PruneOptions prune;
  bool alpha_beta = true;
  bool principal_variation = false;
  std::optional<std::uint64_t> node_budget;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t memo_hits = 0;
  // Nodes whose move list was decided by each rule.
  std::uint64_t dominating_agent = 0;
  std::uint64_t dominating_pair = 0;
  std::uint64_t two_task = 0;
  std::uint64_t pareto = 0;
  std::uint64_t bounds = 0;  // nodes cut by monotone bounds
};

template <class Int>
struct SolveResult {
  Int score;
  std::optional<std::size_t> best_move;  // none at a terminal position
  std::vector<std::size_t> pv;           // filled on request
  SearchStats stats;
};

// Exact value of a move, or bounds on it when the budget ran out.
template <class Int>
struct MoveEvaluation {
  std::size_t agent;
  Int lower;
  Int upper;
  bool exact() const { return lower == upper; }
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    f(i);
    m &= m - 1;
  }
}

// Read-only view of the instance used by the detectors and the search:
// flattened efficiencies plus per-agent maxima.
template <class Int>
class Board {
 public:
  explicit Board(const BasicInstance<Int>& g) : n_(g.size()), t_(g.tasks()) {
    if (n_ > kMaxSearchAgents) {
      throw PreconditionError("search supports at most " +
                              std::to_string(kMaxSearchAgents) + " agents");
    }
    eff_.reserve(n_ * t_);
    max_.reserve(n_);
    for (const auto& a : g.agents()) {
      for (const auto& e : a.eff) eff_.push_back(e);
      max_.push_back(a.max_eff());
    }
    // Classes of identical efficiency vectors, members in index order.
    class_of_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      std::size_t c = classes_.size();
      for (std::size_t k = 0; k < classes_.size(); ++k) {
        if (same_vector(classes_[k].front(), i)) {
          c = k;
          break;
        }
      }
      if (c == classes_.size()) classes_.emplace_back();
      classes_[c].push_back(i);
      class_of_[i] = c;
    }
    has_duplicates_ = classes_.size() != n_;
    all_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
  }

  std::size_t agents() const { return n_; }
  std::size_t tasks() const { return t_; }
  Mask all() const { return all_; }
  const Int& eff(std::size_t agent, std::size_t task) const {
    return eff_[agent * t_ + task];
  }
  const Int& max_eff(std::size_t agent) const { return max_[agent]; }
  bool has_duplicates() const { return has_duplicates_; }
  const std::vector<std::vector<std::size_t>>& classes() const {
    return classes_;
  }

  bool same_vector(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < t_; ++k) {
      if (eff(i, k) != eff(j, k)) return false;
    }
    return true;
  }

  bool weakly_dominates(std::size_t x, std::size_t y) const {
    for (std::size_t k = 0; k < t_; ++k) {
      if (eff(x, k) < eff(y, k)) return false;
    }
    return true;
  }

  // Canonical form of a pair of disjoint sets under permutations of
  // identical agents: inside each class, Alice's members come first, then
  // Bob's, then the free ones.
  std::pair<Mask, Mask> canonical(Mask a, Mask b) const {
    if (!has_duplicates_) return {a, b};
    Mask ca = 0, cb = 0;
    for (const auto& members : classes_) {
      std::size_t na = 0, nb = 0;
      for (auto i : members) {
        na += (a >> i) & 1u;
        nb += (b >> i) & 1u;
      }
      std::size_t k = 0;
      for (; k < na; ++k) ca |= bit(members[k]);
      for (; k < na + nb; ++k) cb |= bit(members[k]);
    }
    return {ca, cb};
  }

  Int assignment(Mask set) const {
    std::vector<std::size_t> members;
    for_each_bit(set, [&](std::size_t i) { members.push_back(i); });
    return max_weight_assignment<Int>(
        t_, members.size(), [&](std::size_t task, std::size_t k) -> const Int& {
          return eff(members[k], task);
        });
  }

 private:
  std::size_t n_;
  std::size_t t_;
  std::vector<Int> eff_;
  std::vector<Int> max_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> classes_;
  bool has_duplicates_ = false;
  Mask all_ = 0;
};

// Best efficiency per task among each player's picks (0 when none).
template <class Int>
struct PickedBests {
  std::vector<Int> alice;
  std::vector<Int> bob;
};

template <class Int>
PickedBests<Int> picked_bests(const Board<Int>& board, Mask a, Mask b) {
  PickedBests<Int> out{std::vector<Int>(board.tasks(), Int(0)),
                       std::vector<Int>(board.tasks(), Int(0))};
  for_each_bit(a, [&](std::size_t i) {
    for (std::size_t k = 0; k < board.tasks(); ++k) {
      if (board.eff(i, k) > out.alice[k]) out.alice[k] = board.eff(i, k);
    }
  });
  for_each_bit(b, [&](std::size_t i) {
    for (std::size_t k = 0; k < board.tasks(); ++k) {
      if (board.eff(i, k) > out.bob[k]) out.bob[k] = board.eff(i, k);
    }
  });
  return out;
}

template <class Int>
Int free_potential(const Board<Int>& board, Mask free) {
  Int total = 0;
  for_each_bit(free, [&](std::size_t i) { total += board.max_eff(i); });
  return total;
}

// x_k - min(alpha_k, beta_k) >= 2 * others for some task k, i.e. the edge
// `x` brings over one of the players' current best on that task is at least
// twice what all other free agents could ever add.
template <class Int>
bool edge_exceeds(const Board<Int>& board, std::size_t x,
                  const std::vector<Int>& alpha, const std::vector<Int>& beta,
                  const Int& others) {
  const Int twice = 2 * others;
  for (std::size_t k = 0; k < board.tasks(); ++k) {
    const Int& floor = alpha[k] < beta[k] ? alpha[k] : beta[k];
    if (board.eff(x, k) - floor >= twice) return true;
  }
  return false;
}

template <class Int>
std::vector<std::size_t> dominating_agents(const Board<Int>& board, Mask a,
                                           Mask b, bool first_only) {
  std::vector<std::size_t> out;
  const Mask free = board.all() & ~(a | b);
  if (free == 0) return out;
  const auto bests = picked_bests(board, a, b);
  const Int total = free_potential(board, free);
  for_each_bit(free, [&](std::size_t x) {
    if (first_only && !out.empty()) return;
    if (edge_exceeds(board, x, bests.alice, bests.bob,
                     Int(total - board.max_eff(x)))) {
      out.push_back(x);
    }
  });
  return out;
}

// Is `x` dominating once `y` has been removed and granted to `holder`?
template <class Int>
bool dominating_after(const Board<Int>& board, const PickedBests<Int>& bests,
                      const Int& total, std::size_t x, std::size_t y,
                      Player holder) {
  const Int others = total - board.max_eff(x) - board.max_eff(y);
  const Int twice = 2 * others;
  for (std::size_t k = 0; k < board.tasks(); ++k) {
    const Int& ay = board.eff(y, k);
    const Int& alpha =
        holder == Player::alice && ay > bests.alice[k] ? ay : bests.alice[k];
    const Int& beta =
        holder == Player::bob && ay > bests.bob[k] ? ay : bests.bob[k];
    const Int& floor = alpha < beta ? alpha : beta;
    if (board.eff(x, k) - floor >= twice) return true;
  }
  return false;
}

template <class Int>
bool is_pair(const Board<Int>& board, const PickedBests<Int>& bests,
             const Int& total, std::size_t x, std::size_t y) {
  for (Player holder : {Player::alice, Player::bob}) {
    if (!dominating_after(board, bests, total, x, y, holder)) return false;
    if (!dominating_after(board, bests, total, y, x, holder)) return false;
  }
  return true;
}

template <class Int>
std::optional<std::pair<std::size_t, std::size_t>> dominating_pair(
    const Board<Int>& board, Mask a, Mask b) {
  const Mask free = board.all() & ~(a | b);
  if (std::popcount(free) < 2) return std::nullopt;
  const auto bests = picked_bests(board, a, b);
  const Int total = free_potential(board, free);
  std::vector<std::size_t> ids;
  for_each_bit(free, [&](std::size_t i) { ids.push_back(i); });
  for (std::size_t p = 0; p < ids.size(); ++p) {
    for (std::size_t q = p + 1; q < ids.size(); ++q) {
      const auto x = ids[p], y = ids[q];
      // Necessary: each must be worth at least twice everything else.
      const Int others = total - board.max_eff(x) - board.max_eff(y);
      if (board.max_eff(x) < 2 * others || board.max_eff(y) < 2 * others) {
        continue;
      }
      if (is_pair(board, bests, total, x, y)) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

// For each of the two tasks, a free agent with the largest efficiency on it.
// Among agents tied on that task the one best on the other task is taken
// (it weakly dominates the rest), then the lowest index.
template <class Int>
std::vector<std::size_t> two_task_candidates(const Board<Int>& board,
                                             Mask free) {
  if (board.tasks() != 2) {
    throw PreconditionError("two-task candidates need exactly 2 tasks");
  }
  std::vector<std::size_t> out;
  for (std::size_t task = 0; task < 2; ++task) {
    const std::size_t other = 1 - task;
    std::optional<std::size_t> best;
    for_each_bit(free, [&](std::size_t i) {
      if (!best) {
        best = i;
        return;
      }
      const auto& bi = board.eff(*best, task);
      const auto& ei = board.eff(i, task);
      if (ei > bi || (ei == bi && board.eff(i, other) > board.eff(*best, other))) {
        best = i;
      }
    });
    if (best && std::find(out.begin(), out.end(), *best) == out.end()) {
      out.push_back(*best);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// One representative (lowest index) of every class of componentwise-maximal
// free agents.
template <class Int>
std::vector<std::size_t> pareto(const Board<Int>& board, Mask free) {
  std::vector<std::size_t> ids, out;
  for_each_bit(free, [&](std::size_t i) { ids.push_back(i); });
  for (auto y : ids) {
    bool dominated = false;
    for (auto x : ids) {
      if (x == y || !board.weakly_dominates(x, y)) continue;
      if (x < y || !board.same_vector(x, y)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(y);
  }
  return out;
}

template <class Int>
std::pair<Mask, Mask> masks_of(const BasicPosition<Int>& p) {
  if (p.instance().size() > kMaxSearchAgents) {
    throw PreconditionError("search supports at most " +
                            std::to_string(kMaxSearchAgents) + " agents");
  }
  Mask a = 0, b = 0;
  for (std::size_t i = 0; i < p.instance().size(); ++i) {
    if (p.owner(i) == Owner::alice) a |= bit(i);
    if (p.owner(i) == Owner::bob) b |= bit(i);
  }
  return {a, b};
}

}  // namespace detail

// Representatives of the componentwise-maximal agents among `free`: every
// dropped agent is weakly dominated by a kept one, and of several identical
// agents only the lowest index is kept.
template <class Int>
std::vector<std::size_t> pareto_candidates(const BasicInstance<Int>& g,
                                           std::span<const std::size_t> free) {
  detail::Board<Int> board(g);
  detail::Mask m = 0;
  for (auto i : free) m |= detail::bit(i);
  return detail::pareto(board, m);
}

template <class Int>
std::vector<std::size_t> pareto_candidates(const BasicPosition<Int>& p) {
  const auto free = p.free_agents();
  return pareto_candidates(p.instance(), std::span<const std::size_t>(free));
}

// A free agent whose pick is optimal by the edge inequality, if any (lowest
// index first).
template <class Int>
std::optional<std::size_t> find_dominating_agent(const BasicPosition<Int>& p) {
  detail::Board<Int> board(p.instance());
  const auto [a, b] = detail::masks_of(p);
  auto all = detail::dominating_agents(board, a, b, true);
  if (all.empty()) return std::nullopt;
  return all.front();
}

// Every free agent satisfying the dominating-agent inequality.
template <class Int>
std::vector<std::size_t> dominating_agents(const BasicPosition<Int>& p) {
  detail::Board<Int> board(p.instance());
  const auto [a, b] = detail::masks_of(p);
  return detail::dominating_agents(board, a, b, false);
}

// Sound but incomplete: reports {X, Y} only when, with either one removed
// and given to either player, the other is a dominating agent.
template <class Int>
std::optional<std::pair<std::size_t, std::size_t>> find_dominating_pair(
    const BasicPosition<Int>& p) {
  detail::Board<Int> board(p.instance());
  const auto [a, b] = detail::masks_of(p);
  return detail::dominating_pair(board, a, b);
}

template <class Int>
bool is_dominating_pair(const BasicPosition<Int>& p, std::size_t x,
                        std::size_t y) {
  if (x == y || !p.is_free(x) || !p.is_free(y)) return false;
  detail::Board<Int> board(p.instance());
  const auto [a, b] = detail::masks_of(p);
  const auto bests = detail::picked_bests(board, a, b);
  const Int total = detail::free_potential(board, board.all() & ~(a | b));
  return detail::is_pair(board, bests, total, x, y);
}

template <class Int>
std::vector<std::size_t> two_task_candidates(const BasicPosition<Int>& p) {
  if (p.instance().tasks() != 2) {
    throw PreconditionError("two-task candidates need exactly 2 tasks");
  }
  detail::Board<Int> board(p.instance());
  const auto [a, b] = detail::masks_of(p);
  return detail::two_task_candidates(board, board.all() & ~(a | b));
}

// Minimax search engine over one root position. Not thread-safe; distinct
// engines share nothing.
template <class Int>
class Solver {
 public:
  Solver(const BasicPosition<Int>& root, SolveOptions options)
      : board_(root.instance()), options_(std::move(options)) {
    std::tie(root_a_, root_b_) = detail::masks_of(root);
    root_player_ = root.to_move();
    Int total = 0;
    for (std::size_t i = 0; i < board_.agents(); ++i) total += board_.max_eff(i);
    infinity_ = total + 1;
  }

  SolveResult<Int> solve() {
    SolveResult<Int> result;
    result.score = exact(root_a_, root_b_, root_player_);
    if ((board_.all() & ~(root_a_ | root_b_)) != 0) {
      result.best_move = best_move(root_a_, root_b_, root_player_, result.score);
      if (options_.principal_variation) {
        result.pv = principal_variation(result.score);
      }
    }
    result.stats = stats_;
    return result;
  }

  // Value of every free agent as the root's next pick.
  std::vector<MoveEvaluation<Int>> evaluate_moves() {
    std::vector<MoveEvaluation<Int>> out;
    const detail::Mask free = board_.all() & ~(root_a_ | root_b_);
    detail::for_each_bit(free, [&](std::size_t i) {
      auto [a, b] = child(root_a_, root_b_, root_player_, i);
      const Player next = opponent(root_player_);
      try {
        Int v = exact(a, b, next);
        out.push_back({i, v, v});
      } catch (const BudgetExceeded&) {
        auto [lo, hi] = bounds(a, b, next);
        out.push_back({i, std::move(lo), std::move(hi)});
      }
    });
    return out;
  }

  const SearchStats& stats() const { return stats_; }

 private:
  struct Key {
    detail::Mask a;
    detail::Mask b;
    Player p;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::uint64_t h = k.a * 0x9E3779B97F4A7C15ull;
      h ^= (k.b + 0x632BE59BD9B4E019ull) * 0xC2B2AE3D27D4EB4Full;
      h ^= static_cast<std::uint64_t>(k.p) + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h ^ (h >> 31));
    }
  };
  struct Bounds {
    Int lower;
    Int upper;
  };
  struct Abort {};

  std::pair<detail::Mask, detail::Mask> child(detail::Mask a, detail::Mask b,
                                              Player p, std::size_t i) const {
    if (p == Player::alice) return {a | detail::bit(i), b};
    return {a, b | detail::bit(i)};
  }

  // Full-window value with a fresh per-call node budget.
  Int exact(detail::Mask a, detail::Mask b, Player p) {
    budget_start_ = stats_.nodes;
    try {
      return search(a, b, p, -infinity_, infinity_);
    } catch (const Abort&) {
      auto [lo, hi] = bounds(a, b, p);
      throw BudgetExceededWithBounds<Int>(stats_.nodes - budget_start_,
                                          std::move(lo), std::move(hi));
    }
  }

  // Bounds known without finishing the search: monotonicity of the
  // assignment value, narrowed by whatever the table proved.
  std::pair<Int, Int> bounds(detail::Mask a, detail::Mask b, Player p) {
    auto [lo, hi] = static_bounds(a, b, p);
    const auto [ca, cb] = board_.canonical(a, b);
    auto it = table_.find(Key{ca, cb, p});
    if (it != table_.end()) {
      if (it->second.lower > lo) lo = it->second.lower;
      if (it->second.upper < hi) hi = it->second.upper;
    }
    return {std::move(lo), std::move(hi)};
  }

  // Monotone bounds, sharpened for the player to move: whatever she picks
  // now is hers, so she is at least as well off as taking her best single
  // agent and conceding every other free agent.
  std::pair<Int, Int> static_bounds(detail::Mask a, detail::Mask b, Player p) {
    const detail::Mask free = board_.all() & ~(a | b);
    Int lo = set_value(a) - set_value(b | free);
    Int hi = set_value(a | free) - set_value(b);
    detail::for_each_bit(free, [&](std::size_t i) {
      const detail::Mask x = detail::bit(i), rest = free & ~x;
      if (p == Player::alice) {
        Int v = set_value(a | x) - set_value(b | rest);
        if (v > lo) lo = std::move(v);
      } else {
        Int v = set_value(a | rest) - set_value(b | x);
        if (v < hi) hi = std::move(v);
      }
    });
    return {std::move(lo), std::move(hi)};
  }

  Int set_value(detail::Mask set) {
    const detail::Mask key = board_.canonical(set, 0).first;
    auto it = set_values_.find(key);
    if (it != set_values_.end()) return it->second;
    Int v = board_.assignment(key);
    set_values_.emplace(key, v);
    return v;
  }

  std::vector<std::size_t> moves(detail::Mask a, detail::Mask b, Player p,
                                 bool count) {
    (void)p;
    const detail::Mask free = board_.all() & ~(a | b);
    const auto& prune = options_.prune;
    std::vector<std::size_t> out;
    if (prune.dominating_agent) {
      out = detail::dominating_agents(board_, a, b, true);
      if (!out.empty()) {
        if (count) ++stats_.dominating_agent;
        return out;
      }
    }
    if (prune.dominating_pair) {
      if (auto pair = detail::dominating_pair(board_, a, b)) {
        if (count) ++stats_.dominating_pair;
        out = {pair->first, pair->second};
        order(out);
        return out;
      }
    }
    if (prune.two_task && board_.tasks() == 2) {
      if (count) ++stats_.two_task;
      out = detail::two_task_candidates(board_, free);
      order(out);
      return out;
    }
    if (prune.pareto) {
      if (count) ++stats_.pareto;
      out = detail::pareto(board_, free);
    } else {
      detail::for_each_bit(free, [&](std::size_t i) { out.push_back(i); });
    }
    order(out);
    return out;
  }

  // Decreasing maximum efficiency, then index.
  void order(std::vector<std::size_t>& ms) const {
    std::stable_sort(ms.begin(), ms.end(), [&](std::size_t x, std::size_t y) {
      if (board_.max_eff(x) != board_.max_eff(y)) {
        return board_.max_eff(x) > board_.max_eff(y);
      }
      return x < y;
    });
  }

  Int search(detail::Mask a, detail::Mask b, Player p, Int alpha, Int beta) {
    ++stats_.nodes;
    if (options_.node_budget &&
        stats_.nodes - budget_start_ > *options_.node_budget) {
      throw Abort{};
    }
    const detail::Mask free = board_.all() & ~(a | b);
    if (free == 0) {
      ++stats_.leaves;
      return set_value(a) - set_value(b);
    }
    if (!options_.alpha_beta) {
      alpha = -infinity_;
      beta = infinity_;
    }
    const auto [ca, cb] = board_.canonical(a, b);
    const Key key{ca, cb, p};
    Int lower = -infinity_, upper = infinity_;
    if (auto it = table_.find(key); it != table_.end()) {
      lower = it->second.lower;
      upper = it->second.upper;
      if (lower == upper) {
        ++stats_.memo_hits;
        return lower;
      }
      if (lower >= beta) {
        ++stats_.memo_hits;
        return lower;
      }
      if (upper <= alpha) {
        ++stats_.memo_hits;
        return upper;
      }
      if (lower > alpha) alpha = lower;
      if (upper < beta) beta = upper;
    }
    if (options_.prune.bounds) {
      auto [lo, hi] = static_bounds(a, b, p);
      if (lo == hi || lo >= beta) {
        ++stats_.bounds;
        return lo;
      }
      if (hi <= alpha) {
        ++stats_.bounds;
        return hi;
      }
      if (options_.alpha_beta) {
        if (lo > alpha) alpha = std::move(lo);
        if (hi < beta) beta = std::move(hi);
      }
    }

    const Int alpha0 = alpha, beta0 = beta;
    std::optional<Int> best;
    for (auto m : moves(a, b, p, true)) {
      auto [na, nb] = child(a, b, p, m);
      Int v = search(na, nb, opponent(p), alpha, beta);
      if (p == Player::alice) {
        if (!best || v > *best) best = v;
        if (*best > alpha) alpha = *best;
      } else {
        if (!best || v < *best) best = v;
        if (*best < beta) beta = *best;
      }
      if (options_.alpha_beta && alpha >= beta) break;
    }

    Bounds& entry =
        table_.try_emplace(key, Bounds{-infinity_, infinity_}).first->second;
    if (*best <= alpha0) {
      if (*best < entry.upper) entry.upper = *best;
    } else if (*best >= beta0) {
      if (*best > entry.lower) entry.lower = *best;
    } else {
      entry.lower = *best;
      entry.upper = *best;
    }
    return *best;
  }

  // Lowest-index candidate move whose child attains `value`, confirmed by a
  // null-window probe.
  std::size_t best_move(detail::Mask a, detail::Mask b, Player p,
                        const Int& value) {
    auto ms = moves(a, b, p, false);
    std::sort(ms.begin(), ms.end());
    budget_start_ = stats_.nodes;
    try {
      for (auto m : ms) {
        auto [na, nb] = child(a, b, p, m);
        if (p == Player::alice) {
          if (search(na, nb, Player::bob, value - 1, value) >= value) return m;
        } else {
          if (search(na, nb, Player::alice, value, value + 1) <= value) return m;
        }
      }
    } catch (const Abort&) {
      auto [lo, hi] = bounds(a, b, p);
      throw BudgetExceededWithBounds<Int>(stats_.nodes - budget_start_,
                                          std::move(lo), std::move(hi));
    }
    throw Error("internal: no candidate move attains the root value");
  }

  std::vector<std::size_t> principal_variation(const Int& value) {
    std::vector<std::size_t> line;
    detail::Mask a = root_a_, b = root_b_;
    Player p = root_player_;
    while ((board_.all() & ~(a | b)) != 0) {
      const auto m = best_move(a, b, p, value);
      line.push_back(m);
      std::tie(a, b) = child(a, b, p, m);
      p = opponent(p);
    }
    return line;
  }

  detail::Board<Int> board_;
  SolveOptions options_;
  detail::Mask root_a_ = 0;
  detail::Mask root_b_ = 0;
  Player root_player_ = Player::alice;
  Int infinity_;
  std::unordered_map<Key, Bounds, KeyHash> table_;
  std::unordered_map<detail::Mask, Int> set_values_;
  SearchStats stats_;
  std::uint64_t budget_start_ = 0;
};

// Game value of `position` with its player to move, plus an optimal move.
// Throws BudgetExceededWithBounds<Int> when a node budget is set and hit.
template <class Int>
SolveResult<Int> solve(const BasicPosition<Int>& position,
                       SolveOptions options = {}) {
  return Solver<Int>(position, std::move(options)).solve();
}

template <class Int>
SolveResult<Int> solve(const BasicInstance<Int>& instance,
                       SolveOptions options = {}) {
  return solve(BasicPosition<Int>(instance), std::move(options));
}

// Value of each free agent as the next pick, with play continuing
// optimally. Entries whose search ran out of budget carry bounds instead.
template <class Int>
std::vector<MoveEvaluation<Int>> evaluate_moves(
    const BasicPosition<Int>& position, SolveOptions options = {}) {
  if (position.is_terminal()) {
    throw PreconditionError("no free agents to evaluate");
  }
  return Solver<Int>(position, std::move(options)).evaluate_moves();
}

}  // namespace draft

#endif  // DRAFTGAME_SOLVER_HPP_
