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

// Randomized cross-validation suites: every fast algorithm against the
// exhaustive oracle, plus the structural properties the theory guarantees.
// Deterministic per seed; used by `draftgame verify`, `draftgame bench` and
// the acceptance runner.

#ifndef DRAFTGAME_SUITES_HPP_
#define DRAFTGAME_SUITES_HPP_

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "draftgame/core.hpp"
#include "draftgame/io.hpp"
#include "draftgame/matching.hpp"
#include "draftgame/oracle.hpp"
#include "draftgame/otp.hpp"
#include "draftgame/reduction.hpp"
#include "draftgame/solver.hpp"

namespace draft::suites {

using Small = std::int64_t;

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t bound_checks = 0;  // 0 <= sc <= max-norm checks performed
  std::uint64_t bound_violations = 0;
  std::vector<std::string> failures;  // capped; see failure_count
  std::uint64_t failure_count = 0;
  double seconds = 0;

  bool passed() const { return failure_count == 0 && bound_violations == 0; }
  void fail(std::string what) {
    ++failure_count;
    if (failures.size() < 20) failures.push_back(std::move(what));
  }
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::uint64_t count = 0;  // 0 = the suite's default
};

namespace detail {

template <class F>
SuiteResult timed(std::string name, F&& body) {
  SuiteResult r;
  r.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

template <class Int>
void check_start_bounds(SuiteResult& r, const BasicInstance<Int>& g,
                        const Int& value, const std::string& label) {
  ++r.bound_checks;
  if (value < 0 || value > score_upper_bound(g)) {
    ++r.bound_violations;
    r.fail(label + ": value " + to_decimal(value) + " outside [0, " +
           to_decimal(score_upper_bound(g)) + "]");
  }
}

inline std::string seed_label(const char* what, std::uint64_t seed) {
  return std::string(what) + " seed " + std::to_string(seed);
}

}  // namespace detail

// solve == brute force on random instances with n <= 8, t <= 3, and the
// returned best move attains the value.
inline SuiteResult solver_vs_oracle(SuiteOptions opt = {}) {
  const std::uint64_t count = opt.count ? opt.count : 200;
  return detail::timed("solver-vs-oracle", [&](SuiteResult& r) {
    for (std::uint64_t k = 0; k < count; ++k) {
      const std::uint64_t seed = opt.seed * 1000003 + k;
      const std::size_t n = 1 + k % 8, t = 1 + (k / 8) % 3;
      const auto g = oracle::random_instance<Small>(n, t, 10, seed);
      const auto label = detail::seed_label("random", seed);
      const Small expected = oracle::brute_force_score(g);
      const auto got = solve(g);
      ++r.cases;
      if (got.score != expected) {
        r.fail(label + ": solve " + std::to_string(got.score) + " != oracle " +
               std::to_string(expected));
      }
      if (got.best_move &&
          oracle::brute_force_value(BasicPosition<Small>(g).after(*got.best_move)) !=
              expected) {
        r.fail(label + ": best move does not attain the value");
      }
      detail::check_start_bounds(r, g, expected, label);
    }
  });
}

// Every rule switched off on its own, alpha-beta off, and everything off:
// the value never moves.
inline SuiteResult pruning_invariance(SuiteOptions opt = {}) {
  const std::uint64_t count = opt.count ? opt.count : 200;
  return detail::timed("pruning-invariance", [&](SuiteResult& r) {
    std::vector<std::pair<std::string, SolveOptions>> variants;
    auto off = [&](const char* name, bool PruneOptions::*rule) {
      SolveOptions o;
      o.prune.*rule = false;
      variants.emplace_back(name, o);
    };
    off("no-dominating-agent", &PruneOptions::dominating_agent);
    off("no-dominating-pair", &PruneOptions::dominating_pair);
    off("no-two-task", &PruneOptions::two_task);
    off("no-pareto", &PruneOptions::pareto);
    off("no-bounds", &PruneOptions::bounds);
    SolveOptions no_ab;
    no_ab.alpha_beta = false;
    variants.emplace_back("no-alpha-beta", no_ab);
    SolveOptions none;
    none.prune = PruneOptions::none();
    none.alpha_beta = false;
    variants.emplace_back("nothing", none);

    for (std::uint64_t k = 0; k < count; ++k) {
      const std::uint64_t seed = opt.seed * 7919 + k;
      const std::size_t n = 1 + k % 9, t = 1 + (k / 9) % 3;
      // Small maxima make ties and dominations common.
      const auto g = oracle::random_instance<Small>(n, t, k % 2 ? 10 : 3, seed);
      const Small reference = solve(g).score;
      ++r.cases;
      for (const auto& [name, o] : variants) {
        const Small v = solve(g, o).score;
        if (v != reference) {
          r.fail(detail::seed_label("random", seed) + ": " + name + " gives " +
                 std::to_string(v) + ", all rules give " +
                 std::to_string(reference));
        }
      }
      detail::check_start_bounds(r, g, reference, detail::seed_label("random", seed));
    }
  });
}

// Two-task OTP instances: linear algorithm == XP == brute force, n <= 10.
inline SuiteResult otp_two_task(SuiteOptions opt = {}) {
  const std::uint64_t count = opt.count ? opt.count : 500;
  return detail::timed("otp-two-task", [&](SuiteResult& r) {
    for (std::uint64_t k = 0; k < count; ++k) {
      const std::uint64_t seed = opt.seed * 104729 + k;
      const std::size_t n = 1 + k % 10;
      const auto g = oracle::random_otp_instance<Small>(n, 2, 10, seed);
      const auto label = detail::seed_label("otp2", seed);
      const Small expected = oracle::brute_force_score(g);
      const auto lin = solve_two_task_otp(g);
      const auto xp = solve_otp_xp(g);
      ++r.cases;
      if (lin.score != expected || xp.score != expected) {
        r.fail(label + ": linear " + std::to_string(lin.score) + ", xp " +
               std::to_string(xp.score) + ", oracle " + std::to_string(expected));
      }
      for (const auto& move : {lin.best_move, xp.best_move}) {
        if (move &&
            oracle::brute_force_value(BasicPosition<Small>(g).after(*move)) != expected) {
          r.fail(label + ": opening move does not attain the value");
        }
      }
      const auto bound = otp_state_bound(*is_otp_instance(g));
      if (xp.visited_states > bound) {
        r.fail(label + ": " + std::to_string(xp.visited_states) +
               " reduced states visited, bound " + std::to_string(bound));
      }
      detail::check_start_bounds(r, g, expected, label);
    }
  });
}

// OTP instances with t <= 3 and n <= 9: XP == brute force, state bound.
inline SuiteResult otp_xp(SuiteOptions opt = {}) {
  const std::uint64_t count = opt.count ? opt.count : 300;
  return detail::timed("otp-xp", [&](SuiteResult& r) {
    for (std::uint64_t k = 0; k < count; ++k) {
      const std::uint64_t seed = opt.seed * 15485863 + k;
      const std::size_t n = 1 + k % 9, t = 1 + (k / 9) % 3;
      const auto g = oracle::random_otp_instance<Small>(n, t, 10, seed);
      const auto label = detail::seed_label("otp", seed);
      const Small expected = oracle::brute_force_score(g);
      const auto xp = solve_otp_xp(g);
      ++r.cases;
      if (xp.score != expected) {
        r.fail(label + ": xp " + std::to_string(xp.score) + ", oracle " +
               std::to_string(expected));
      }
      const auto bound = otp_state_bound(*is_otp_instance(g));
      if (xp.visited_states > bound) {
        r.fail(label + ": " + std::to_string(xp.visited_states) +
               " reduced states visited, bound " + std::to_string(bound));
      }
      detail::check_start_bounds(r, g, expected, label);
    }
  });
}

// sc(G + G) == 0, and the pairing reply holds random Alice play to 0.
inline SuiteResult mean_zero(SuiteOptions opt = {}) {
  const std::uint64_t count = opt.count ? opt.count : 50;
  return detail::timed("mean-zero", [&](SuiteResult& r) {
    for (std::uint64_t k = 0; k < count; ++k) {
      const std::uint64_t seed = opt.seed * 3571 + k;
      const std::size_t n = 1 + k % 4, t = 1 + (k / 4) % 2;
      const auto g = oracle::random_instance<Small>(n, t, 10, seed);
      const auto label = detail::seed_label("mean-zero", seed);
      const auto sum = oracle::game_sum(std::vector{g, g});
      const Small v = oracle::brute_force_score(sum);
      ++r.cases;
      if (v != 0) r.fail(label + ": sc(G+G) = " + std::to_string(v));
      detail::check_start_bounds(r, sum, v, label);

      const oracle::PairingTable table(g.size(), 2);
      std::mt19937_64 rng(seed);
      for (int playout = 0; playout < 5; ++playout) {
        BasicPosition<Small> p(sum);
        while (!p.is_terminal()) {
          const auto free = p.free_agents();
          std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
          const std::size_t a = free[pick(rng)];
          p.play(a);
          p.play(oracle::pairing_bob_move(p, a, table));
        }
        const Small score = final_score(p);
        ++r.cases;
        if (score != 0) {
          r.fail(label + ": pairing playout ended at " + std::to_string(score));
        }
      }
    }
  });
}

// The exhaustive n = 1, m <= 3 corpus: the draft instance reaches s exactly
// when the satisfier wins, and the forced line is recognized ply by ply.
inline SuiteResult reduction_corpus(SuiteOptions opt = {},
                                    std::uint64_t node_budget = 5000000) {
  (void)opt;
  return detail::timed("reduction-corpus", [&](SuiteResult& r) {
    for (const auto& f : enumerate_corpus(1, 3)) {
      const auto label = "formula [" + to_qdimacs(f) + "]";
      const QbfPlayer winner = qbf_game_winner(f);
      const QbfFormula nf = normalize_qbf(f);
      ++r.cases;
      if (qbf_game_winner(nf) != winner) {
        r.fail(label + ": normalization changed the winner");
      }
      const GadgetInstance gadget = build_draft_instance(nf);
      const auto g = instance_cast<Small>(gadget.instance);
      SolveOptions so;
      so.node_budget = node_budget;
      const Small score = solve(g, so).score;
      const bool reaches = Integer(score) >= gadget.threshold;
      if (reaches != (winner == QbfPlayer::satisfier)) {
        r.fail(label + ": score " + std::to_string(score) + " vs threshold " +
               gadget.threshold.str() + " but " + std::string(to_string(winner)) +
               " wins");
      }
      detail::check_start_bounds(r, g, score, label);
      const auto report = verify_forced_order(gadget);
      if (!report.ok()) {
        r.fail(label + ": forced order broken at " +
               report.first_failure.value_or("?"));
      }
    }
  });
}

// parse(serialize(G)) == G on random instances, some with huge entries.
inline SuiteResult io_round_trip(SuiteOptions opt = {}) {
  const std::uint64_t count = opt.count ? opt.count : 100;
  return detail::timed("io-round-trip", [&](SuiteResult& r) {
    for (std::uint64_t k = 0; k < count; ++k) {
      const std::uint64_t seed = opt.seed * 31337 + k;
      auto g = oracle::random_instance<Integer>(1 + k % 6, 1 + k % 4, 1000, seed);
      if (k % 3 == 0) {
        std::vector<Integer> eff(g.tasks(), Integer(0));
        eff[0] = Integer(1) << (64 + k % 100);
        g.add_agent("huge", eff);
      }
      if (k % 2 == 0) g.set_threshold(Integer(static_cast<long long>(k)));
      ++r.cases;
      const auto back = parse_instance<Integer>(serialize_instance(g));
      if (!(back == g)) r.fail(detail::seed_label("io", seed) + ": round trip differs");
    }
  });
}

struct ScalingPoint {
  std::size_t n;
  double seconds;
  std::uint64_t visited_states;
  std::uint64_t state_bound;
};

struct Scaling {
  std::size_t tasks;
  std::vector<ScalingPoint> points;
  double slope = 0;  // least-squares slope of log(seconds) over log(n)
};

// Runtime of solve_otp_xp on random OTP instances of growing size. Each
// point is the fastest of `repeats` runs.
inline Scaling xp_scaling(std::size_t tasks, const std::vector<std::size_t>& sizes,
                          std::uint64_t seed = 1, int repeats = 3) {
  Scaling out;
  out.tasks = tasks;
  for (auto n : sizes) {
    const auto g = oracle::random_otp_instance<Small>(n, tasks, 1000000, seed + n);
    ScalingPoint pt{n, 1e300, 0, otp_state_bound(*is_otp_instance(g))};
    for (int rep = 0; rep < repeats; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto res = solve_otp_xp(g);
      const double s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      pt.seconds = std::min(pt.seconds, s);
      pt.visited_states = res.visited_states;
    }
    out.points.push_back(pt);
  }
  double mx = 0, my = 0;
  for (const auto& p : out.points) {
    mx += std::log(static_cast<double>(p.n));
    my += std::log(p.seconds);
  }
  mx /= static_cast<double>(out.points.size());
  my /= static_cast<double>(out.points.size());
  double sxy = 0, sxx = 0;
  for (const auto& p : out.points) {
    const double dx = std::log(static_cast<double>(p.n)) - mx;
    sxy += dx * (std::log(p.seconds) - my);
    sxx += dx * dx;
  }
  out.slope = sxx > 0 ? sxy / sxx : 0;
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "solver", "pruning", "otp", "mean-zero", "reduction", "io"};
  return names;
}

// Runs a named suite ("otp" covers both OTP suites).
inline std::vector<SuiteResult> run_suite(const std::string& name,
                                          SuiteOptions opt = {}) {
  if (name == "solver") return {solver_vs_oracle(opt)};
  if (name == "pruning") return {pruning_invariance(opt)};
  if (name == "otp") return {otp_two_task(opt), otp_xp(opt)};
  if (name == "mean-zero") return {mean_zero(opt)};
  if (name == "reduction") return {reduction_corpus(opt)};
  if (name == "io") return {io_round_trip(opt)};
  throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace draft::suites

#endif  // DRAFTGAME_SUITES_HPP_
