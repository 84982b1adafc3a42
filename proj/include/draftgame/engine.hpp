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

// Front-end glue: picks the cheapest exact method for a position and runs
// it on machine integers whenever no intermediate value can overflow.

#ifndef DRAFTGAME_ENGINE_HPP_
#define DRAFTGAME_ENGINE_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "draftgame/core.hpp"
#include "draftgame/otp.hpp"
#include "draftgame/solver.hpp"

namespace draft {

enum class Method { automatic, search, otp_two_task, otp_xp };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::automatic:
      return "auto";
    case Method::search:
      return "search";
    case Method::otp_two_task:
      return "otp-linear";
    case Method::otp_xp:
      return "otp-xp";
  }
  return "?";
}

inline std::optional<Method> method_from_string(std::string_view s) {
  for (Method m : {Method::automatic, Method::search, Method::otp_two_task,
                   Method::otp_xp}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

struct EngineOptions {
  Method method = Method::automatic;
  SolveOptions search;
  XpOptions xp;
};

template <class Int>
struct Analysis {
  Int score;
  std::optional<std::size_t> best_move;
  std::vector<std::size_t> pv;
  Method method = Method::search;
  SearchStats stats;                // search only
  std::uint64_t visited_states = 0;  // otp-xp only
};

// True when every sum the algorithms form stays far inside int64: the search
// adds up to all efficiencies twice over (window bounds, doubled potentials).
template <class Int>
bool fits_machine_integers(const BasicInstance<Int>& g) {
  static const Integer limit(std::numeric_limits<std::int64_t>::max() / 8);
  Integer total = 0;
  for (const auto& a : g.agents()) {
    for (const auto& e : a.eff) total += Integer(e);
  }
  if (g.threshold()) {
    const Integer s(*g.threshold());
    if (s > limit || -s > limit) return false;
  }
  return total <= limit && Integer(g.scale()) <= limit;
}

namespace detail {

template <class Int>
Method choose_method(const BasicPosition<Int>& p, const EngineOptions& opt) {
  if (opt.method != Method::automatic) return opt.method;
  // The OTP algorithms answer for fresh positions only, and give no PV.
  if (p.num_picked() != 0 || p.first_player() != Player::alice ||
      opt.search.principal_variation) {
    return Method::search;
  }
  const auto& g = p.instance();
  auto grouping = is_otp_instance(g);
  if (!grouping) return Method::search;
  if (g.tasks() == 2) return Method::otp_two_task;
  if (g.tasks() <= opt.xp.max_tasks &&
      otp_state_bound(*grouping) <= 2 * opt.xp.max_states) {
    return Method::otp_xp;
  }
  return Method::search;
}

}  // namespace detail

// Exact value and an optimal move of `p`. Throws PreconditionError when an
// explicitly requested OTP method does not apply, and whatever the chosen
// algorithm throws (budget, guards).
template <class Int>
Analysis<Int> analyze(const BasicPosition<Int>& p,
                      const EngineOptions& options = {}) {
  Analysis<Int> out;
  out.method = detail::choose_method(p, options);
  if (out.method != Method::search &&
      (p.num_picked() != 0 || p.first_player() != Player::alice)) {
    throw PreconditionError(std::string(to_string(out.method)) +
                            " only solves starting positions");
  }
  switch (out.method) {
    case Method::otp_two_task: {
      auto r = solve_two_task_otp(p.instance());
      out.score = std::move(r.score);
      out.best_move = r.best_move;
      break;
    }
    case Method::otp_xp: {
      auto r = solve_otp_xp(p.instance(), options.xp);
      out.score = std::move(r.score);
      out.best_move = r.best_move;
      out.visited_states = r.visited_states;
      break;
    }
    default: {
      auto r = solve(p, options.search);
      out.score = std::move(r.score);
      out.best_move = r.best_move;
      out.pv = std::move(r.pv);
      out.stats = r.stats;
      break;
    }
  }
  return out;
}

template <class Int>
Analysis<Integer> widen(Analysis<Int> a) {
  return {Integer(a.score), a.best_move, std::move(a.pv), a.method, a.stats,
          a.visited_states};
}

// Runs `f` on the position converted to int64 when that is safe, else on
// arbitrary-precision integers. `f` is a generic callable returning the same
// type for both.
template <class F>
auto with_best_integers(const Position& p, F&& f) {
  if (fits_machine_integers(p.instance())) {
    const auto a = p.picked(Player::alice), b = p.picked(Player::bob);
    auto small = BasicPosition<std::int64_t>::from_picks(
        instance_cast<std::int64_t>(p.instance()), a, b, p.to_move());
    return f(small);
  }
  return f(p);
}

}  // namespace draft

#endif  // DRAFTGAME_ENGINE_HPP_
