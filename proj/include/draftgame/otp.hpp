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

// Exact algorithms for instances where every agent has at most one nonzero
// efficiency ("one-trick" agents).
//
// Two facts make these instances tractable. Some optimal move always takes
// the best free agent of some task, so each task is consumed top-down and
// only a counter is needed per task. And once both players hold an agent of
// a task, the rest of that task's agents can never be assigned, so the task
// is closed for good.

#ifndef DRAFTGAME_OTP_HPP_
#define DRAFTGAME_OTP_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "draftgame/core.hpp"

namespace draft {

// Per task, the agents whose only nonzero efficiency lies there, sorted by
// decreasing efficiency (ties by agent index). All-zero agents are left out.
template <class Int>
struct OtpGrouping {
  struct Entry {
    Int eff;
    std::size_t agent;
  };
  std::vector<std::vector<Entry>> tasks;

  std::size_t count(std::size_t task) const { return tasks[task].size(); }
  // 1-based: the i-th best efficiency of `task`; 0 for i == 0.
  Int eff(std::size_t task, std::size_t i) const {
    return i == 0 ? Int(0) : tasks[task][i - 1].eff;
  }
};

template <class Int>
std::optional<OtpGrouping<Int>> is_otp_instance(const BasicInstance<Int>& g) {
  OtpGrouping<Int> grouping;
  grouping.tasks.resize(g.tasks());
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::optional<std::size_t> task;
    for (std::size_t k = 0; k < g.tasks(); ++k) {
      if (g.eff(i, k) == 0) continue;
      if (task) return std::nullopt;
      task = k;
    }
    if (task) grouping.tasks[*task].push_back({g.eff(i, *task), i});
  }
  for (auto& list : grouping.tasks) {
    std::stable_sort(list.begin(), list.end(),
                     [](const auto& x, const auto& y) { return x.eff > y.eff; });
  }
  return grouping;
}

template <class Int>
struct OtpResult {
  Int score;
  std::optional<std::size_t> best_move;  // an optimal opening pick
  std::uint64_t visited_states = 0;      // DP only
};

namespace detail {

// Alice opens with the top agent of the first list and Bob answers with the
// top of the second (his other sensible answer, the second agent of the
// first list, ends the game at alpha). B(i)/A(i) are the values at Bob's /
// Alice's i-th turn; both lists are padded with zeros to a common length m.
template <class Int>
Int otp_two_task_opening(const std::vector<Int>& x, const std::vector<Int>& y) {
  const std::size_t m = x.size();
  auto X = [&](std::size_t i) -> const Int& { return x[i - 1]; };
  auto Y = [&](std::size_t i) -> const Int& { return y[i - 1]; };
  Int b = X(1) - Y(1);  // B(m)
  if (m == 1) return b;
  const Int alpha = X(1) - X(2) + Y(1) - Y(2);
  for (std::size_t i = m - 1; i >= 1; --i) {
    Int a_next = X(1) - X(i + 1) + Y(i + 1) - Y(1);  // Alice takes Y_{i+1}
    if (b > a_next) a_next = b;                        // A(i+1)
    Int cross = i == 1 ? alpha : Int(X(1) - X(i + 1) + Y(i) - Y(1));
    b = cross < a_next ? cross : a_next;               // B(i)
  }
  return b;
}

}  // namespace detail

// Linear-time optimal score for two-task one-trick instances (after an
// O(n log n) sort).
template <class Int>
OtpResult<Int> solve_two_task_otp(const BasicInstance<Int>& g) {
  if (g.tasks() != 2) throw PreconditionError("instance must have 2 tasks");
  auto grouping = is_otp_instance(g);
  if (!grouping) throw PreconditionError("instance is not one-trick");
  const auto& first = grouping->tasks[0];
  const auto& second = grouping->tasks[1];
  const std::size_t m = std::max(first.size(), second.size());
  if (m == 0) {
    // Only all-zero agents (if any): every pick is worth nothing.
    std::optional<std::size_t> any;
    if (g.size() != 0) any = 0;
    return {Int(0), any, 0};
  }

  std::vector<Int> x(m, Int(0)), y(m, Int(0));
  for (std::size_t i = 0; i < first.size(); ++i) x[i] = first[i].eff;
  for (std::size_t i = 0; i < second.size(); ++i) y[i] = second[i].eff;

  Int open_first = detail::otp_two_task_opening(x, y);
  Int open_second = detail::otp_two_task_opening(y, x);
  OtpResult<Int> out;
  const bool take_first =
      second.empty() || (!first.empty() && open_first >= open_second);
  out.score = open_first >= open_second ? open_first : open_second;
  out.best_move = take_first ? first.front().agent : second.front().agent;
  // A padded zero agent is never a real first pick; if the best opening is
  // on an empty list, any real agent dominates it anyway.
  return out;
}

enum class OtpStatus : std::uint8_t {
  open_untouched,  // nobody has picked in this task (q == n)
  open_alice,      // only Alice has picked; q agents left
  open_bob,
  closed_alice,  // Alice took the top; q = rank of Bob's best pick, 0 = none
  closed_bob,
};

struct OtpTaskState {
  OtpStatus status = OtpStatus::open_untouched;
  std::size_t q = 0;
  friend bool operator==(const OtpTaskState&, const OtpTaskState&) = default;
};

// Compressed game state: who moves, and per task who leads it and how far
// down the sorted list play has gone.
struct OtpReducedState {
  Player to_move = Player::alice;
  std::vector<OtpTaskState> tasks;
  friend bool operator==(const OtpReducedState&, const OtpReducedState&) = default;
};

template <class Int>
OtpReducedState otp_initial_state(const OtpGrouping<Int>& g,
                                  Player first = Player::alice) {
  OtpReducedState s;
  s.to_move = first;
  for (std::size_t j = 0; j < g.tasks.size(); ++j) {
    s.tasks.push_back({OtpStatus::open_untouched, g.count(j)});
  }
  return s;
}

inline bool otp_can_pick(const OtpTaskState& t) {
  switch (t.status) {
    case OtpStatus::open_untouched:
      return t.q > 0;
    case OtpStatus::open_alice:
    case OtpStatus::open_bob:
      return true;
    default:
      return false;
  }
}

inline bool otp_is_terminal(const OtpReducedState& s) {
  return std::none_of(s.tasks.begin(), s.tasks.end(),
                      [](const auto& t) { return otp_can_pick(t); });
}

// The player to move takes the best remaining agent of `task`.
template <class Int>
OtpReducedState otp_apply(const OtpGrouping<Int>& g, const OtpReducedState& s,
                          std::size_t task) {
  const std::size_t n = g.count(task);
  const OtpTaskState& cur = s.tasks.at(task);
  if (!otp_can_pick(cur)) throw PreconditionError("task has no legal pick");
  const Player p = s.to_move;
  const OtpStatus open_mine =
      p == Player::alice ? OtpStatus::open_alice : OtpStatus::open_bob;
  const OtpStatus closed_mine =
      p == Player::alice ? OtpStatus::closed_alice : OtpStatus::closed_bob;
  const OtpStatus closed_theirs =
      p == Player::alice ? OtpStatus::closed_bob : OtpStatus::closed_alice;

  OtpReducedState next = s;
  next.to_move = opponent(p);
  OtpTaskState& t = next.tasks[task];
  if (cur.status == OtpStatus::open_untouched || cur.status == open_mine) {
    const std::size_t left = cur.q - 1;
    t = left == 0 ? OtpTaskState{closed_mine, 0} : OtpTaskState{open_mine, left};
  } else {
    // Cross pick: the opponent led this task; the mover's agent has rank
    // n - q + 1 and no further pick here can change either player's best.
    t = OtpTaskState{closed_theirs, n - cur.q + 1};
  }
  return next;
}

// Alice's best picked efficiency minus Bob's, summed over tasks. Only
// meaningful at terminal states (open tasks contribute their leader's top).
template <class Int>
Int otp_terminal_value(const OtpGrouping<Int>& g, const OtpReducedState& s) {
  Int total = 0;
  for (std::size_t j = 0; j < s.tasks.size(); ++j) {
    const auto& t = s.tasks[j];
    const std::size_t n = g.count(j);
    switch (t.status) {
      case OtpStatus::open_untouched:
        break;
      case OtpStatus::open_alice:
        total += g.eff(j, 1);
        break;
      case OtpStatus::open_bob:
        total -= g.eff(j, 1);
        break;
      case OtpStatus::closed_alice:
        total += g.eff(j, 1) - g.eff(j, t.q);
        break;
      case OtpStatus::closed_bob:
        total -= g.eff(j, 1) - g.eff(j, t.q);
        break;
    }
    (void)n;
  }
  return total;
}

struct XpOptions {
  std::size_t max_tasks = 6;
  std::uint64_t max_states = std::uint64_t{1} << 25;
};

namespace detail {

// Dense memo over reduced states. Per task with n agents the state is coded
// in [0, 4n - 1): untouched, open (q in 1..n-1) for each owner, closed
// (q in {0} or 2..n) for each owner. The player to move is a function of the
// number of picks, so it is not part of the index.
template <class Int>
class XpSolver {
 public:
  XpSolver(const OtpGrouping<Int>& g, const XpOptions& opt) : g_(g) {
    std::uint64_t states = 1;
    strides_.resize(g.tasks.size());
    for (std::size_t j = 0; j < g.tasks.size(); ++j) {
      strides_[j] = states;
      const std::uint64_t radix = radix_of(j);
      if (states > opt.max_states / radix) {
        throw GuardError("reduced state space exceeds " +
                         std::to_string(opt.max_states) + " states");
      }
      states *= radix;
    }
    memo_.resize(states);
    seen_.assign(states, 0);
  }

  Int value(const OtpReducedState& s, std::uint64_t index) {
    if (seen_[index]) return memo_[index];
    ++visited_;
    Int result;
    if (otp_is_terminal(s)) {
      result = otp_terminal_value(g_, s);
    } else {
      std::optional<Int> best;
      for (std::size_t j = 0; j < s.tasks.size(); ++j) {
        if (!otp_can_pick(s.tasks[j])) continue;
        OtpReducedState next = otp_apply(g_, s, j);
        const std::uint64_t next_index =
            index - code(j, s.tasks[j]) * strides_[j] +
            code(j, next.tasks[j]) * strides_[j];
        Int v = value(next, next_index);
        if (!best || (s.to_move == Player::alice ? v > *best : v < *best)) {
          best = std::move(v);
        }
      }
      result = std::move(*best);
    }
    seen_[index] = 1;
    memo_[index] = result;
    return result;
  }

  std::uint64_t index_of(const OtpReducedState& s) const {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < s.tasks.size(); ++j) {
      idx += code(j, s.tasks[j]) * strides_[j];
    }
    return idx;
  }

  std::uint64_t visited() const { return visited_; }

 private:
  std::uint64_t radix_of(std::size_t j) const {
    const std::uint64_t n = g_.count(j);
    return n == 0 ? 1 : 4 * n - 1;
  }

  std::uint64_t code(std::size_t j, const OtpTaskState& t) const {
    const std::uint64_t n = g_.count(j);
    switch (t.status) {
      case OtpStatus::open_untouched:
        return 0;
      case OtpStatus::open_alice:
        return 1 + (t.q - 1);
      case OtpStatus::open_bob:
        return 1 + (n - 1) + (t.q - 1);
      case OtpStatus::closed_alice:
        return 1 + 2 * (n - 1) + (t.q == 0 ? 0 : t.q - 1);
      case OtpStatus::closed_bob:
        return 1 + 2 * (n - 1) + n + (t.q == 0 ? 0 : t.q - 1);
    }
    return 0;
  }

  const OtpGrouping<Int>& g_;
  std::vector<std::uint64_t> strides_;
  std::vector<Int> memo_;
  std::vector<char> seen_;
  std::uint64_t visited_ = 0;
};

}  // namespace detail

// 2 * prod_j 4 n_j over tasks with at least one one-trick agent: the cap on
// the number of reduced states.
template <class Int>
std::uint64_t otp_state_bound(const OtpGrouping<Int>& g) {
  std::uint64_t bound = 2;
  for (const auto& list : g.tasks) {
    if (!list.empty()) bound *= 4 * static_cast<std::uint64_t>(list.size());
  }
  return bound;
}

// O(n^t) dynamic program over reduced states.
template <class Int>
OtpResult<Int> solve_otp_xp(const BasicInstance<Int>& g,
                            const XpOptions& options = {}) {
  auto grouping = is_otp_instance(g);
  if (!grouping) throw PreconditionError("instance is not one-trick");
  if (g.tasks() > options.max_tasks) {
    throw GuardError("XP algorithm limited to " +
                     std::to_string(options.max_tasks) + " tasks");
  }
  detail::XpSolver<Int> dp(*grouping, options);
  const auto root = otp_initial_state(*grouping);
  OtpResult<Int> out;
  out.score = dp.value(root, dp.index_of(root));
  for (std::size_t j = 0; j < root.tasks.size(); ++j) {
    if (!otp_can_pick(root.tasks[j])) continue;
    auto next = otp_apply(*grouping, root, j);
    if (dp.value(next, dp.index_of(next)) == out.score) {
      out.best_move = grouping->tasks[j].front().agent;
      break;
    }
  }
  if (!out.best_move && g.size() != 0) out.best_move = 0;  // all-zero agents
  out.visited_states = dp.visited();
  return out;
}

// Drops every free one-trick agent whose task already holds a nonzero pick
// of both players; such agents can never be assigned. Valid on positions
// reachable under optimal play.
template <class Int>
BasicPosition<Int> reduce_same_task(const BasicPosition<Int>& p) {
  const auto& g = p.instance();
  std::vector<char> held_a(g.tasks(), 0), held_b(g.tasks(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (p.is_free(i)) continue;
    auto& held = p.owner(i) == Owner::alice ? held_a : held_b;
    for (std::size_t k = 0; k < g.tasks(); ++k) {
      if (g.eff(i, k) != 0) held[k] = 1;
    }
  }
  BasicInstance<Int> kept(g.tasks());
  std::vector<std::size_t> a, b;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (p.is_free(i)) {
      std::size_t nonzero = 0, task = 0;
      for (std::size_t k = 0; k < g.tasks(); ++k) {
        if (g.eff(i, k) != 0) {
          ++nonzero;
          task = k;
        }
      }
      if (nonzero == 1 && held_a[task] && held_b[task]) continue;
    } else {
      (p.owner(i) == Owner::alice ? a : b).push_back(kept.size());
    }
    kept.add_agent(g.agent(i));
  }
  kept.set_threshold(g.threshold());
  kept.set_scale(g.scale());
  return BasicPosition<Int>::from_picks(std::move(kept), a, b, p.to_move());
}

}  // namespace draft

#endif  // DRAFTGAME_OTP_HPP_
