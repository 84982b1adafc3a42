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

#ifndef DRAFTGAME_MATCHING_HPP_
#define DRAFTGAME_MATCHING_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "draftgame/core.hpp"

namespace draft {
namespace detail {

// Maximum-weight assignment of `tasks` tasks to `agents` agents where
// weight(task, agent) >= 0. Shortest-augmenting-path Hungarian method with
// row/column potentials, O(N^3) for N = max(tasks, agents). The smaller side
// is padded with zero-weight dummies, so leaving a task unassigned is the
// same as assigning it a zero-efficiency agent.
//
// Runs on costs -weight; no infinity sentinel is needed (minv entries carry
// an explicit "set" flag) so it works unchanged on unbounded integers.
// When `matched` is given it receives, per task, the agent assigned to it
// (or npos when the task is left to a dummy or gets a zero-weight agent).
template <class Int, class Weight>
Int max_weight_assignment(std::size_t tasks, std::size_t agents,
                          Weight&& weight,
                          std::vector<std::size_t>* matched = nullptr) {
  if (matched) matched->assign(tasks, static_cast<std::size_t>(-1));
  const std::size_t n = std::max(tasks, agents);
  if (n == 0) return Int(0);
  auto cost = [&](std::size_t row, std::size_t col) -> Int {
    // 1-based rows/cols, as in the classical formulation.
    if (row > tasks || col > agents) return Int(0);
    return -Int(weight(row - 1, col - 1));
  };

  std::vector<Int> u(n + 1, Int(0)), v(n + 1, Int(0)), minv(n + 1, Int(0));
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1, 0), minv_set(n + 1, 0);

  for (std::size_t row = 1; row <= n; ++row) {
    p[0] = row;
    std::size_t j0 = 0;
    std::fill(used.begin(), used.end(), 0);
    std::fill(minv_set.begin(), minv_set.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      Int delta = 0;
      bool delta_set = false;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Int cur = cost(i0, j) - u[i0] - v[j];
        if (!minv_set[j] || cur < minv[j]) {
          minv[j] = std::move(cur);
          minv_set[j] = 1;
          way[j] = j0;
        }
        if (!delta_set || minv[j] < delta) {
          delta = minv[j];
          delta_set = true;
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Int total = 0;
  for (std::size_t col = 1; col <= n; ++col) {
    const std::size_t row = p[col];
    if (row >= 1 && row <= tasks && col <= agents) {
      const Int& w = weight(row - 1, col - 1);
      total += w;
      if (matched && w != 0) (*matched)[row - 1] = col - 1;
    }
  }
  return total;
}

}  // namespace detail

// Optimal value of the classical assignment problem on a set of efficiency
// vectors: max over injective partial maps tasks -> agents of the summed
// efficiencies. Throws PreconditionError on a dimension mismatch.
template <class Int>
Int assignment_value(std::span<const std::vector<Int>> agents,
                     std::size_t tasks) {
  for (const auto& eff : agents) {
    if (eff.size() != tasks) {
      throw PreconditionError("efficiency vector of length " +
                              std::to_string(eff.size()) + " for " +
                              std::to_string(tasks) + " tasks");
    }
  }
  return detail::max_weight_assignment<Int>(
      tasks, agents.size(),
      [&](std::size_t task, std::size_t a) -> const Int& {
        return agents[a][task];
      });
}

template <class Int>
Int assignment_value(const std::vector<std::vector<Int>>& agents,
                     std::size_t tasks) {
  return assignment_value(std::span<const std::vector<Int>>(agents), tasks);
}

// Assignment value of the given agents of an instance.
template <class Int>
Int assignment_value(const BasicInstance<Int>& instance,
                     std::span<const std::size_t> members) {
  return detail::max_weight_assignment<Int>(
      instance.tasks(), members.size(),
      [&](std::size_t task, std::size_t a) -> const Int& {
        return instance.eff(members[a], task);
      });
}

// An optimal assignment of the given agents: per task, the instance index of
// its agent, or nullopt when the task stays empty.
template <class Int>
std::vector<std::optional<std::size_t>> optimal_assignment(
    const BasicInstance<Int>& instance, std::span<const std::size_t> members) {
  std::vector<std::size_t> matched;
  detail::max_weight_assignment<Int>(
      instance.tasks(), members.size(),
      [&](std::size_t task, std::size_t a) -> const Int& {
        return instance.eff(members[a], task);
      },
      &matched);
  std::vector<std::optional<std::size_t>> out(instance.tasks());
  for (std::size_t k = 0; k < matched.size(); ++k) {
    if (matched[k] != static_cast<std::size_t>(-1)) out[k] = members[matched[k]];
  }
  return out;
}

// Score of a finished game: Alice's assignment value minus Bob's.
template <class Int>
Int final_score(const BasicPosition<Int>& position) {
  if (!position.is_terminal()) {
    throw PreconditionError(std::to_string(position.num_free()) +
                            " agents are still free");
  }
  const auto a = position.picked(Player::alice);
  const auto b = position.picked(Player::bob);
  return assignment_value(position.instance(), std::span<const std::size_t>(a)) -
         assignment_value(position.instance(), std::span<const std::size_t>(b));
}

// Current assignment value of one player's picks (the provisional value the
// service reports while a draft is in progress).
template <class Int>
Int provisional_value(const BasicPosition<Int>& position, Player p) {
  const auto picks = position.picked(p);
  return assignment_value(position.instance(),
                          std::span<const std::size_t>(picks));
}

}  // namespace draft

#endif  // DRAFTGAME_MATCHING_HPP_
