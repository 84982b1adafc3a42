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

// Ground truth for the test suites: an unpruned exhaustive game solver whose
// leaves are scored by direct enumeration of injective assignments, plus
// random instance generators, game sums and the copy-pairing strategy.
//
// Nothing here shares code with the solver or the matching kernel, so a bug
// in either cannot be masked by the same bug here.

#ifndef DRAFTGAME_ORACLE_HPP_
#define DRAFTGAME_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "draftgame/core.hpp"

namespace draft::oracle {

struct BruteForceGuard {
  std::size_t max_agents = 12;
  std::size_t max_tasks = 4;
};

namespace detail {

// max over injective partial maps task -> member, enumerated task by task.
template <class Int>
Int enumerate_assignments(const BasicInstance<Int>& g,
                          const std::vector<std::size_t>& members,
                          std::size_t task, std::uint64_t used) {
  if (task == g.tasks()) return Int(0);
  Int best = enumerate_assignments(g, members, task + 1, used);
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (used >> k & 1u) continue;
    const Int& e = g.eff(members[k], task);
    if (e == 0) continue;
    Int v = e + enumerate_assignments(g, members, task + 1,
                                      used | (std::uint64_t{1} << k));
    if (v > best) best = std::move(v);
  }
  return best;
}

template <class Int>
class Exhaustive {
 public:
  Exhaustive(const BasicInstance<Int>& g, Player first)
      : g_(g), first_(first), n_(g.size()) {
    std::size_t states = 1;
    for (std::size_t i = 0; i < n_; ++i) states *= 3;
    memo_.resize(states);
    pow3_.resize(n_ + 1, 1);
    for (std::size_t i = 1; i <= n_; ++i) pow3_[i] = pow3_[i - 1] * 3;
    set_value_.resize(std::size_t{1} << n_);
  }

  // owners: 0 free, 1 Alice, 2 Bob (base-3 digits of `code`).
  Int value(std::size_t code, std::size_t picks) {
    auto& slot = memo_[code];
    if (slot) return *slot;
    Int result;
    if (picks == n_) {
      std::uint64_t a = 0, b = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        const auto digit = code / pow3_[i] % 3;
        if (digit == 1) a |= std::uint64_t{1} << i;
        if (digit == 2) b |= std::uint64_t{1} << i;
      }
      result = set_value(a) - set_value(b);
    } else {
      const Player mover = picks % 2 == 0 ? first_ : opponent(first_);
      const std::size_t digit = mover == Player::alice ? 1 : 2;
      std::optional<Int> best;
      for (std::size_t i = 0; i < n_; ++i) {
        if (code / pow3_[i] % 3 != 0) continue;
        Int v = value(code + digit * pow3_[i], picks + 1);
        if (!best || (mover == Player::alice ? v > *best : v < *best)) {
          best = std::move(v);
        }
      }
      result = std::move(*best);
    }
    slot = result;
    return result;
  }

  std::size_t encode(const BasicPosition<Int>& p) const {
    std::size_t code = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      code += static_cast<std::size_t>(p.owner(i)) * pow3_[i];
    }
    return code;
  }

 private:
  Int set_value(std::uint64_t mask) {
    auto& slot = set_value_[mask];
    if (!slot) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < n_; ++i) {
        if (mask >> i & 1u) members.push_back(i);
      }
      slot = enumerate_assignments(g_, members, 0, 0);
    }
    return *slot;
  }

  const BasicInstance<Int>& g_;
  Player first_;
  std::size_t n_;
  std::vector<std::size_t> pow3_;
  std::vector<std::optional<Int>> memo_;
  std::vector<std::optional<Int>> set_value_;
};

inline void check_guard(std::size_t n, std::size_t t, const BruteForceGuard& guard) {
  if (n > guard.max_agents || t > guard.max_tasks) {
    throw GuardError("brute force limited to " +
                     std::to_string(guard.max_agents) + " agents and " +
                     std::to_string(guard.max_tasks) + " tasks (got " +
                     std::to_string(n) + " agents, " + std::to_string(t) +
                     " tasks)");
  }
}

}  // namespace detail

// Assignment value by direct enumeration of injective task -> agent maps.
template <class Int>
Int enumerated_assignment_value(const BasicInstance<Int>& g,
                                const std::vector<std::size_t>& members) {
  if (members.size() > 63) throw GuardError("too many agents to enumerate");
  return detail::enumerate_assignments(g, members, 0, 0);
}

// Exact minimax value of a position, by exhaustion over every pick order.
template <class Int>
Int brute_force_value(const BasicPosition<Int>& position,
                      BruteForceGuard guard = {}) {
  const auto& g = position.instance();
  detail::check_guard(g.size(), g.tasks(), guard);
  detail::Exhaustive<Int> ex(g, position.first_player());
  return ex.value(ex.encode(position), position.num_picked());
}

// sc(G): Alice moves first from the empty position.
template <class Int>
Int brute_force_score(const BasicInstance<Int>& instance,
                      BruteForceGuard guard = {}) {
  return brute_force_value(BasicPosition<Int>(instance), guard);
}

// Per-move exhaustive values of every free agent (tests of the hint engine).
template <class Int>
std::vector<std::pair<std::size_t, Int>> brute_force_move_values(
    const BasicPosition<Int>& position, BruteForceGuard guard = {}) {
  const auto& g = position.instance();
  detail::check_guard(g.size(), g.tasks(), guard);
  detail::Exhaustive<Int> ex(g, position.first_player());
  std::vector<std::pair<std::size_t, Int>> out;
  for (auto i : position.free_agents()) {
    const auto child = position.after(i);
    out.emplace_back(i, ex.value(ex.encode(child), child.num_picked()));
  }
  return out;
}

// Sum of games: task axes are concatenated and every agent is embedded with
// zeros on the other components' tasks. Agent ids get a "#k" copy suffix.
template <class Int>
BasicInstance<Int> game_sum(const std::vector<BasicInstance<Int>>& parts) {
  std::size_t tasks = 0;
  for (const auto& g : parts) tasks += g.tasks();
  BasicInstance<Int> out(tasks);
  std::size_t offset = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& g = parts[k];
    for (const auto& a : g.agents()) {
      std::vector<Int> eff(tasks, Int(0));
      for (std::size_t j = 0; j < g.tasks(); ++j) eff[offset + j] = a.eff[j];
      out.add_agent(a.id + "#" + std::to_string(k + 1), std::move(eff));
    }
    offset += g.tasks();
  }
  return out;
}

// k copies of the same instance, summed.
template <class Int>
BasicInstance<Int> copies(const BasicInstance<Int>& g, std::size_t k) {
  return game_sum(std::vector<BasicInstance<Int>>(k, g));
}

// Partner map on a sum of 2n copies of G built by copies(): agent i of copy
// k (0-based) is partnered with agent i of copy k^1, so partners always have
// identical efficiency vectors.
class PairingTable {
 public:
  PairingTable(std::size_t agents_per_copy, std::size_t num_copies)
      : per_copy_(agents_per_copy), copies_(num_copies) {
    if (num_copies % 2 != 0) {
      throw PreconditionError("pairing needs an even number of copies");
    }
  }

  std::size_t size() const noexcept { return per_copy_ * copies_; }

  std::size_t partner(std::size_t agent) const {
    if (agent >= size()) throw PreconditionError("agent outside the sum");
    const std::size_t copy = agent / per_copy_;
    const std::size_t index = agent % per_copy_;
    return (copy ^ 1u) * per_copy_ + index;
  }

 private:
  std::size_t per_copy_;
  std::size_t copies_;
};

// Bob's reply under the pairing strategy: the partner of Alice's last pick.
template <class Int>
std::size_t pairing_bob_move(const BasicPosition<Int>& state,
                             std::size_t alice_last_pick,
                             const PairingTable& table) {
  if (table.size() != state.instance().size()) {
    throw PreconditionError("pairing table does not match the instance");
  }
  if (state.to_move() != Player::bob) {
    throw PreconditionError("pairing reply requested with Alice to move");
  }
  if (state.owner(alice_last_pick) != Owner::alice) {
    throw PreconditionError("last pick is not Alice's");
  }
  const std::size_t reply = table.partner(alice_last_pick);
  if (!state.is_free(reply)) {
    throw PreconditionError("partner of Alice's last pick is not free");
  }
  return reply;
}

// Uniform integer efficiencies in [0, max_eff], deterministic per seed.
template <class Int = std::int64_t>
BasicInstance<Int> random_instance(std::size_t n, std::size_t t,
                                   std::int64_t max_eff, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, max_eff);
  BasicInstance<Int> g(t);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> eff(t);
    for (auto& e : eff) e = Int(dist(rng));
    g.add_agent("a" + std::to_string(i), std::move(eff));
  }
  return g;
}

// As random_instance, but all coordinates except one uniformly chosen task
// are zero, so every agent is an OTP.
template <class Int = std::int64_t>
BasicInstance<Int> random_otp_instance(std::size_t n, std::size_t t,
                                       std::int64_t max_eff,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, max_eff);
  std::uniform_int_distribution<std::size_t> task(0, t - 1);
  BasicInstance<Int> g(t);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> eff(t, Int(0));
    const auto j = task(rng);
    eff[j] = Int(dist(rng));
    g.add_agent("a" + std::to_string(i), std::move(eff));
  }
  return g;
}

// sc(k G) / k as an exact rational (a finite-k estimate of the mean).
template <class Int>
boost::rational<Int> mean_estimate(const BasicInstance<Int>& g, std::size_t k,
                                   BruteForceGuard guard = {}) {
  if (k == 0) throw PreconditionError("copies must be positive");
  const auto sum = copies(g, k);
  return boost::rational<Int>(brute_force_score(sum, guard),
                              Int(static_cast<long long>(k)));
}

}  // namespace draft::oracle

#endif  // DRAFTGAME_ORACLE_HPP_
