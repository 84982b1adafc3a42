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

// Acceptance runner: one PASS/FAIL line per headline requirement, with the
// measurement behind it. Exit status is nonzero if any line fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "draftgame.hpp"
#include "draftgame/suites.hpp"

namespace {

using namespace draft;
using I64 = BasicInstance<std::int64_t>;
using P64 = BasicPosition<std::int64_t>;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& check) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS " : "FAIL ") << name << " -- " << o.detail << " ["
            << std::fixed << std::setprecision(3) << s << " s]" << std::endl;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

I64 example1() {
  I64 g(2);
  g.add_agent("(4,7)", {4, 7});
  g.add_agent("(5,5)", {5, 5});
  g.add_agent("(0,4)", {0, 4});
  return g;
}

I64 example2() {
  I64 g(3);
  g.add_agent("(5,0,0)", {5, 0, 0});
  g.add_agent("(0,5,0)", {0, 5, 0});
  g.add_agent("(0,0,5)", {0, 0, 5});
  g.add_agent("(4,4,4)", {4, 4, 4});
  g.add_agent("(0,3,3)", {0, 3, 3});
  g.add_agent("(3,0,0)", {3, 0, 0});
  return g;
}

// Indices of the moves attaining the exhaustive value at p.
std::vector<std::size_t> optimal_moves(const P64& p) {
  const auto value = oracle::brute_force_value(p);
  std::vector<std::size_t> out;
  for (const auto& [agent, v] : oracle::brute_force_move_values(p)) {
    if (v == value) out.push_back(agent);
  }
  return out;
}

Outcome example1_line() {
  const auto t0 = std::chrono::steady_clock::now();
  SolveOptions o;
  o.principal_variation = true;
  const auto r = solve(example1(), o);
  const double took = elapsed(t0);
  std::ostringstream d;
  bool ok = r.score == 3 && took < 1.0 && r.pv == std::vector<std::size_t>{0, 1, 2};
  // Uniqueness of the line, ply by ply, by exhaustion.
  P64 p(example1());
  for (std::size_t expected : {0, 1, 2}) {
    const auto best = optimal_moves(p);
    ok = ok && best == std::vector<std::size_t>{expected};
    p.play(expected);
  }
  const auto alice = provisional_value(p, Player::alice);
  ok = ok && alice == 8 && final_score(p) == 3 && oracle::brute_force_score(example1()) == 3;
  d << "sc = " << r.score << ", line";
  for (auto i : r.pv) d << " " << example1().agent(i).id;
  d << " unique at every ply, Alice's assignment " << alice << ", solve "
    << std::setprecision(6) << took << " s";
  return {ok, d.str()};
}

Outcome example2_pick() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = solve(example2());
  const double took = elapsed(t0);
  const auto oracle_value = oracle::brute_force_score(example2());
  const auto best = optimal_moves(P64(example2()));
  const bool ok = r.score == 2 && oracle_value == 2 && r.best_move == 3u &&
                  best == std::vector<std::size_t>{3} && took < 10.0;
  std::ostringstream d;
  d << "sc = " << r.score << " (oracle " << oracle_value << "), optimal first picks {";
  for (auto i : best) d << example2().agent(i).id;
  d << "}, solver picks " << example2().agent(*r.best_move).id << " in "
    << std::setprecision(6) << took << " s";
  return {ok, d.str()};
}

std::vector<suites::SuiteResult> all_results;

const suites::SuiteResult& keep(suites::SuiteResult r) {
  all_results.push_back(std::move(r));
  return all_results.back();
}

std::string failures_of(const suites::SuiteResult& r) {
  std::string s;
  for (const auto& f : r.failures) s += "; " + f;
  return s;
}

Outcome oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& general = keep(suites::solver_vs_oracle({1, 200}));
  const auto& otp2 = keep(suites::otp_two_task({1, 500}));
  const double took = elapsed(t0);
  const bool ok = general.failure_count == 0 && otp2.failure_count == 0 &&
                  general.cases >= 200 && otp2.cases >= 500 && took < 300;
  std::ostringstream d;
  d << general.cases << " general instances (n <= 8, t <= 3), " << otp2.cases
    << " two-task one-trick instances (n <= 10) x {linear, DP}: "
    << general.failure_count + otp2.failure_count << " mismatches"
    << failures_of(general) << failures_of(otp2);
  return {ok, d.str()};
}

Outcome mean_zero() {
  const auto& r = keep(suites::mean_zero({1, 50}));
  std::ostringstream d;
  d << "50 instances G with sc(G+G) = 0 and 250 random-Alice pairing playouts "
    << "ending at 0: " << r.failure_count << " failures" << failures_of(r);
  return {r.passed() && r.cases >= 300, d.str()};
}

Outcome pruning() {
  const auto& r = keep(suites::pruning_invariance({1, 300}));
  SolveOptions off;
  off.prune = PruneOptions::none();
  off.alpha_beta = false;
  SolveOptions rules_off;
  rules_off.prune = PruneOptions::none();
  const auto on = solve(example2());
  const auto none = solve(example2(), off);
  const auto ab_only = solve(example2(), rules_off);
  const double ratio =
      static_cast<double>(none.stats.nodes) / static_cast<double>(on.stats.nodes);
  std::ostringstream d;
  d << r.cases << " instances x 7 configurations (each rule off alone, alpha-beta "
    << "off, all off): " << r.failure_count << " score changes; example 2 nodes "
    << on.stats.nodes << " (all on) vs " << none.stats.nodes << " (all off) = "
    << std::setprecision(2) << ratio << "x; rules off with alpha-beta kept: "
    << ab_only.stats.nodes << " nodes" << failures_of(r);
  return {r.failure_count == 0 && none.score == on.score && ratio >= 5.0, d.str()};
}

Outcome reduction() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& r = keep(suites::reduction_corpus({}, 5000000));
  const double took = elapsed(t0);
  std::ostringstream d;
  d << r.cases << " formulas (n = 1, m <= 3): threshold equivalence and forced "
    << "order, " << r.failure_count << " failures" << failures_of(r);
  return {r.failure_count == 0 && r.cases == 68 && took < 600, d.str()};
}

double slope_of(const std::vector<double>& xs, const std::vector<double>& ys) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (std::log(xs[i]) - mx) * (std::log(ys[i]) - my);
    sxx += (std::log(xs[i]) - mx) * (std::log(xs[i]) - mx);
  }
  return sxy / sxx;
}

Outcome xp_scaling() {
  const auto& small = keep(suites::otp_xp({1, 300}));
  bool ok = small.failure_count == 0;
  std::ostringstream d;
  d << "state bound held on " << small.cases + 500 << " suite instances";
  for (std::size_t t : {2, 3}) {
    const auto s = suites::xp_scaling(t, {20, 40, 80, 160}, 1, 5);
    std::vector<double> ns, states;
    for (const auto& p : s.points) {
      ok = ok && p.visited_states <= p.state_bound;
      ns.push_back(static_cast<double>(p.n));
      states.push_back(static_cast<double>(p.visited_states));
    }
    const bool within = std::abs(s.slope - static_cast<double>(t)) <= 0.5;
    ok = ok && within;
    d << "; t = " << t << ": runtime slope " << std::setprecision(2) << s.slope
      << (within ? " (within" : " (OUTSIDE") << " " << t << " +- 0.5), visited-state slope "
      << slope_of(ns, states) << ", times";
    for (const auto& p : s.points) d << " " << std::setprecision(6) << p.seconds;
  }
  return {ok, d.str()};
}

Outcome bounds() {
  std::uint64_t checks = 0, violations = 0;
  for (const auto& r : all_results) {
    checks += r.bound_checks;
    violations += r.bound_violations;
  }
  std::ostringstream d;
  d << checks << " start values checked against [0, max-norm] across all suites: "
    << violations << " violations";
  return {violations == 0 && checks >= 1000, d.str()};
}

}  // namespace

int main() {
  report("example 1: sc = 3, unique line (4,7) (5,5) (0,4)", example1_line);
  report("example 2: sc = 2, (4,4,4) the only optimal first pick", example2_pick);
  report("oracle equivalence (general search and both one-trick algorithms)",
         oracle_equivalence);
  report("mean-zero: sc(G+G) = 0 and pairing playouts end at 0", mean_zero);
  report("pruning soundness and >= 5x node reduction on example 2", pruning);
  report("reduction soundness on the n = 1, m <= 3 corpus", reduction);
  report("one-trick DP: state bound and n^t runtime growth", xp_scaling);
  // Runs last: it aggregates the instances of every suite above.
  report("score bounds 0 <= sc <= max-norm on every suite instance", bounds);
  std::cout << (failures == 0 ? "all criteria met" : std::to_string(failures) + " failing")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
