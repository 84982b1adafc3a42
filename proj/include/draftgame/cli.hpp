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

// The `draftgame` command line. run_cli() takes its streams as arguments so
// tests can drive every subcommand in-process.
//
// Exit codes: 0 ok / YES, 1 NO (threshold not met, check mismatch, suite
// failure), 2 usage, parse, guard or budget error.

#ifndef DRAFTGAME_CLI_HPP_
#define DRAFTGAME_CLI_HPP_

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "draftgame/core.hpp"
#include "draftgame/engine.hpp"
#include "draftgame/io.hpp"
#include "draftgame/matching.hpp"
#include "draftgame/oracle.hpp"
#include "draftgame/reduction.hpp"
#include "draftgame/service.hpp"
#include "draftgame/solver.hpp"
#include "draftgame/suites.hpp"

namespace draft::cli {

enum Exit : int { ok = 0, no = 1, error = 2 };

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
  if (!f.flush()) throw Error("write to '" + path + "' failed");
}

inline std::string eff_text(const Instance& g, std::size_t i) {
  std::string s = "(";
  for (std::size_t k = 0; k < g.tasks(); ++k) {
    if (k) s += ",";
    s += g.eff(i, k).str();
  }
  return s + ")";
}

inline std::string agent_text(const Instance& g, std::size_t i) {
  return g.agent(i).id + " " + eff_text(g, i);
}

// "-1.25" against the instance's scale: the threshold in internal units.
inline Integer scaled_threshold(const std::string& text, const Integer& scale) {
  const bool negative = !text.empty() && text[0] == '-';
  const auto d =
      draft::detail::parse_decimal(negative ? text.substr(1) : text, "--threshold");
  const Integer num = d.digits * scale;
  const Integer den = draft::detail::pow10(d.decimals);
  if (num % den != 0) {
    throw ParseError("--threshold",
                     "'" + text + "' is finer than the instance's scale");
  }
  return negative ? Integer(-(num / den)) : Integer(num / den);
}

inline std::string with_scale(const Integer& v, const Integer& scale) {
  if (scale == 1) return v.str();
  // Exact decimal rendering when the scale is a power of ten.
  Integer p = 1;
  std::size_t digits = 0;
  while (p < scale) {
    p *= 10;
    ++digits;
  }
  if (p != scale) return v.str() + "/" + scale.str();
  Integer a = v < 0 ? Integer(-v) : v;
  std::string frac = Integer(a % scale).str();
  frac.insert(0, digits - frac.size(), '0');
  return (v < 0 ? "-" : "") + Integer(a / scale).str() + "." + frac;
}

inline json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"leaves", s.leaves},
          {"memo_hits", s.memo_hits},
          {"dominating_agent", s.dominating_agent},
          {"dominating_pair", s.dominating_pair},
          {"two_task", s.two_task},
          {"pareto", s.pareto},
          {"bounds", s.bounds}};
}

inline void print_error(std::ostream& err, const std::string& format,
                        std::ostream& out, const std::string& code,
                        const std::string& message, json extra = json::object()) {
  if (format == "json") {
    json body = draft::service::detail::error_body(code, message);
    body.update(extra);
    out << body.dump(2) << "\n";
  }
  err << "error: " << message << "\n";
}

// Engine move for play mode: exact when unbudgeted; on an exhausted budget,
// the move with the best guaranteed bound for the mover.
inline std::size_t engine_move(const Position& p, std::optional<std::uint64_t> budget) {
  try {
    return draft::service::detail::engine_pick(p, budget);
  } catch (const BudgetExceeded&) {
    const auto values = draft::service::detail::move_values(p, *budget);
    const bool alice = p.to_move() == Player::alice;
    auto better = [&](const auto& x, const auto& y) {
      return alice ? x.second.lower > y.second.lower
                   : x.second.upper < y.second.upper;
    };
    return std::min_element(values.begin(), values.end(), better)->first;
  }
}

struct SolveArgs {
  std::string path = "-";
  std::optional<std::string> threshold;
  bool pv = false;
  bool no_prune = false;
  std::optional<std::uint64_t> budget;
  std::string format = "text";
  std::string method = "auto";
};

inline int cmd_solve(const SolveArgs& a, std::istream& in, std::ostream& out,
                     std::ostream& err) {
  const Position p = parse_position(read_input(a.path, in));
  const Instance& g = p.instance();
  EngineOptions opt;
  opt.method = *method_from_string(a.method);
  opt.search.principal_variation = a.pv;
  opt.search.node_budget = a.budget;
  if (a.no_prune) {
    opt.search.prune = PruneOptions::none();
    opt.search.alpha_beta = false;
  }
  std::optional<Integer> threshold = g.threshold();
  if (a.threshold) threshold = scaled_threshold(*a.threshold, g.scale());

  Analysis<Integer> r;
  try {
    r = with_best_integers(p, [&](const auto& q) { return widen(analyze(q, opt)); });
  } catch (const BudgetExceeded& e) {
    std::string lo, hi;
    if (auto* b = dynamic_cast<const BudgetExceededWithBounds<std::int64_t>*>(&e)) {
      lo = std::to_string(b->lower()), hi = std::to_string(b->upper());
    } else if (auto* b = dynamic_cast<const BudgetExceededWithBounds<Integer>*>(&e)) {
      lo = b->lower().str(), hi = b->upper().str();
    }
    json extra = json::object();
    std::string msg = e.what();
    if (!lo.empty()) {
      extra = {{"lower", lo}, {"upper", hi}};
      msg += "; score in [" + lo + ", " + hi + "]";
    }
    print_error(err, a.format, out, "budget_exceeded", msg, extra);
    return error;
  }

  const bool yes = threshold && r.score >= *threshold;
  if (a.format == "json") {
    json doc = {{"score", json_integer(r.score)},
                {"method", std::string(to_string(r.method))},
                {"to_move", std::string(to_string(p.to_move()))}};
    if (g.scale() != 1) {
      doc["scale"] = json_integer(g.scale());
      doc["score_scaled"] = with_scale(r.score, g.scale());
    }
    doc["best_move"] = r.best_move ? json(g.agent(*r.best_move).id) : json(nullptr);
    if (a.pv) {
      json line = json::array();
      Position end = p;
      for (auto i : r.pv) {
        line.push_back(g.agent(i).id);
        end.play(i);
      }
      doc["pv"] = std::move(line);
      doc["final_position"] = position_to_json(end);
    }
    if (r.method == Method::search) doc["stats"] = stats_json(r.stats);
    if (r.method == Method::otp_xp) doc["visited_states"] = r.visited_states;
    if (threshold) {
      doc["threshold"] = json_integer(*threshold);
      doc["decision"] = yes ? "YES" : "NO";
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "score " << r.score.str();
    if (g.scale() != 1) out << " (" << with_scale(r.score, g.scale()) << " unscaled)";
    if (r.best_move) out << ", best " << agent_text(g, *r.best_move);
    out << "\nmethod " << to_string(r.method);
    if (r.method == Method::otp_two_task) out << " (two-task one-trick linear algorithm)";
    if (r.method == Method::otp_xp) {
      out << " (reduced-position dynamic program, " << r.visited_states << " states)";
    }
    out << "\n";
    if (a.pv) {
      out << "pv";
      Player mover = p.to_move();
      for (auto i : r.pv) {
        out << " " << (mover == Player::alice ? "A:" : "B:") << agent_text(g, i);
        mover = opponent(mover);
      }
      out << "\n";
    }
    if (r.method == Method::search) {
      const auto& s = r.stats;
      out << "nodes " << s.nodes << ", memo hits " << s.memo_hits
          << ", pruned: dominating agent " << s.dominating_agent
          << ", dominating pair " << s.dominating_pair << ", two-task "
          << s.two_task << ", pareto " << s.pareto << ", bounds " << s.bounds
          << "\n";
    }
    if (threshold) {
      out << (yes ? "YES" : "NO") << " (score " << (yes ? ">=" : "<") << " "
          << threshold->str() << ")\n";
    }
  }
  return threshold && !yes ? no : ok;
}

inline int cmd_check(const std::string& path, const std::string& format,
                     std::istream& in, std::ostream& out) {
  const Position p = parse_position(read_input(path, in));
  const Integer oracle = oracle::brute_force_value(p);
  const Integer searched = solve(p).score;
  EngineOptions opt;
  const auto dispatched =
      with_best_integers(p, [&](const auto& q) { return widen(analyze(q, opt)); });
  SolveOptions bare;
  bare.prune = PruneOptions::none();
  bare.alpha_beta = false;
  const Integer unpruned = solve(p, bare).score;
  const bool agree =
      searched == oracle && dispatched.score == oracle && unpruned == oracle;
  if (format == "json") {
    out << json{{"oracle", json_integer(oracle)},
                {"search", json_integer(searched)},
                {"search_unpruned", json_integer(unpruned)},
                {"auto", json_integer(dispatched.score)},
                {"auto_method", std::string(to_string(dispatched.method))},
                {"agree", agree}}
               .dump(2)
        << "\n";
  } else {
    out << "oracle " << oracle.str() << ", search " << searched.str()
        << ", unpruned " << unpruned.str() << ", " << to_string(dispatched.method)
        << " " << dispatched.score.str() << "\n"
        << (agree ? "agree" : "MISMATCH") << "\n";
  }
  return agree ? ok : no;
}

inline int cmd_reduce(const std::string& path, const std::optional<std::string>& output,
                      const std::optional<std::string>& names, bool check,
                      std::istream& in, std::ostream& out, std::ostream& err) {
  const QbfFormula f = parse_qdimacs(read_input(path, in));
  QbfFormula nf = f;
  if (!is_normalized(f)) {
    nf = normalize_qbf(f);
    err << "note: formula normalized (pure literals fixed, polarities flipped)\n";
  }
  const GadgetInstance gadget = build_draft_instance(nf);

  json sidecar = {{"formula", to_qdimacs(f)},
                  {"normalized", to_qdimacs(nf)},
                  {"threshold", json_integer(gadget.threshold)},
                  {"tasks", gadget.task_names},
                  {"agents", gadget.agent_names}};
  json table = json::object();
  for (const auto& [symbol, v] : gadget.efficiency_table) table[symbol] = json_integer(v);
  sidecar["efficiencies"] = std::move(table);
  auto roles = [](const std::vector<ClauseRoles>& rs) {
    json a = json::array();
    for (const auto& r : rs) {
      auto opt = [](const std::optional<std::size_t>& c) {
        return c ? json(*c + 1) : json(nullptr);
      };
      a.push_back({{"j", opt(r.j)}, {"k", opt(r.k)}, {"l", opt(r.l)}});
    }
    return a;
  };
  sidecar["x_roles"] = roles(gadget.x_roles);
  sidecar["y_roles"] = roles(gadget.y_roles);

  const std::string instance_text = serialize_instance(gadget.instance, 2) + "\n";
  std::optional<std::string> names_path = names;
  if (output) {
    write_file(*output, instance_text);
    if (!names_path) {
      std::string base = *output;
      if (base.size() > 5 && base.ends_with(".json")) base.resize(base.size() - 5);
      names_path = base + ".names.json";
    }
  } else {
    out << instance_text;
  }
  if (names_path) write_file(*names_path, sidecar.dump(2) + "\n");

  if (check) {
    const QbfPlayer winner = qbf_game_winner(nf);
    const Integer score = with_best_integers(Position(gadget.instance), [](const auto& q) {
      return Integer(solve(q).score);
    });
    const bool reaches = score >= gadget.threshold;
    const bool consistent = reaches == (winner == QbfPlayer::satisfier);
    err << "winner " << to_string(winner) << ", score " << score.str()
        << ", threshold " << gadget.threshold.str() << ": "
        << (consistent ? "consistent" : "INCONSISTENT") << "\n";
    if (!consistent) return no;
  }
  return ok;
}

inline int cmd_verify(const std::string& suite, std::uint64_t seed, std::uint64_t count,
                      const std::string& format, std::ostream& out) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suites::suite_names();
  } else {
    names = {suite};
  }
  suites::SuiteOptions opt{seed, count};
  bool all = true;
  json report = json::array();
  for (const auto& name : names) {
    for (const auto& r : suites::run_suite(name, opt)) {
      all = all && r.passed();
      if (format == "json") {
        report.push_back({{"suite", r.name},
                          {"passed", r.passed()},
                          {"cases", r.cases},
                          {"bound_checks", r.bound_checks},
                          {"bound_violations", r.bound_violations},
                          {"failures", r.failures},
                          {"seconds", r.seconds}});
      } else {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases
            << " cases, " << r.bound_checks << " bound checks, seed " << seed
            << ", " << std::fixed << std::setprecision(2) << r.seconds << " s\n";
        out.unsetf(std::ios::floatfield);
        for (const auto& f : r.failures) out << "  " << f << "\n";
      }
    }
  }
  if (format == "json") out << report.dump(2) << "\n";
  return all ? ok : no;
}

inline int cmd_bench(const std::vector<std::size_t>& tasks,
                     const std::vector<std::size_t>& sizes, std::uint64_t seed,
                     int repeats, const std::string& format, std::ostream& out) {
  json report = json::array();
  for (auto t : tasks) {
    const auto s = suites::xp_scaling(t, sizes, seed, repeats);
    if (format == "json") {
      json pts = json::array();
      for (const auto& p : s.points) {
        pts.push_back({{"n", p.n},
                       {"seconds", p.seconds},
                       {"visited_states", p.visited_states},
                       {"state_bound", p.state_bound}});
      }
      report.push_back({{"tasks", t}, {"slope", s.slope}, {"points", pts}});
    } else {
      out << "t = " << t << "\n";
      for (const auto& p : s.points) {
        out << "  n " << std::setw(5) << p.n << "  " << std::setw(12) << std::fixed
            << std::setprecision(6) << p.seconds << " s  " << std::setw(10)
            << p.visited_states << " states (bound " << p.state_bound << ")\n";
      }
      out << "  log-log slope " << std::setprecision(2) << s.slope << "\n";
      out.unsetf(std::ios::floatfield);
    }
  }
  if (format == "json") out << report.dump(2) << "\n";
  return ok;
}

inline void print_board(const Position& p, std::ostream& out) {
  const Instance& g = p.instance();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Owner o = p.owner(i);
    out << "  " << std::left << std::setw(10) << g.agent(i).id << std::right
        << std::setw(16) << eff_text(g, i) << "  "
        << (o == Owner::alice ? "alice" : o == Owner::bob ? "bob" : "-") << "\n";
  }
  out << "  provisional alice " << provisional_value(p, Player::alice).str()
      << ", bob " << provisional_value(p, Player::bob).str() << ", score "
      << (provisional_value(p, Player::alice) - provisional_value(p, Player::bob)).str()
      << "\n";
}

inline int cmd_play(const std::string& path, const std::string& side,
                    const std::optional<std::string>& save,
                    std::optional<std::uint64_t> budget, std::istream& in,
                    std::ostream& out) {
  std::istringstream none;
  // Reading the instance from stdin would leave no input for the moves.
  if (path == "-") throw Error("play needs an instance file, not stdin");
  Position p = parse_position(read_input(path, none));
  const Instance& g = p.instance();
  const Player human = *player_from_string(side);
  out << "you are " << to_string(human) << "; commands: <agent id>, hint, show, quit\n";
  print_board(p, out);

  auto score_line = [&] {
    const Integer a = provisional_value(p, Player::alice);
    const Integer b = provisional_value(p, Player::bob);
    return "provisional alice " + a.str() + ", bob " + b.str() + ", score " +
           Integer(a - b).str();
  };

  while (!p.is_terminal()) {
    if (p.to_move() != human) {
      const std::size_t pick = engine_move(p, budget);
      p.play(pick);
      out << to_string(opponent(human)) << " picks " << agent_text(g, pick) << "; "
          << score_line() << "\n";
      continue;
    }
    out << to_string(human) << "> " << std::flush;
    std::string line;
    if (!std::getline(in, line)) line = "quit";
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    if (line == "quit") {
      const std::string doc = serialize_position(p, 2) + "\n";
      if (save) {
        write_file(*save, doc);
        out << "saved position to " << *save << "\n";
      } else {
        out << doc;
      }
      return ok;
    }
    if (line == "show") {
      print_board(p, out);
      continue;
    }
    if (line == "help") {
      out << "enter an agent id to pick it; hint shows exact move values\n";
      continue;
    }
    if (line == "hint") {
      const auto values = draft::service::detail::move_values(
          p, budget.value_or(std::numeric_limits<std::uint64_t>::max()));
      for (const auto& [i, v] : values) {
        out << "  " << std::left << std::setw(10) << g.agent(i).id << std::right
            << std::setw(16) << eff_text(g, i) << "  ";
        if (v.lower == v.upper) {
          out << v.lower.str() << "\n";
        } else {
          out << "[" << v.lower.str() << ", " << v.upper.str() << "]\n";
        }
      }
      continue;
    }
    const auto idx = g.index_of(line);
    if (!idx) {
      out << "unknown agent '" << line << "'\n";
      continue;
    }
    if (!p.is_free(*idx)) {
      out << "agent '" << line << "' is already taken\n";
      continue;
    }
    p.play(*idx);
    out << "you pick " << agent_text(g, *idx) << "; " << score_line() << "\n";
  }
  out << "final score " << final_score(p).str() << "\n";
  if (save) write_file(*save, serialize_position(p, 2) + "\n");
  return ok;
}

inline int cmd_serve(const std::string& host, int port,
                     const std::optional<std::string>& snapshot_dir,
                     const std::optional<std::string>& static_dir, std::ostream& out) {
  draft::service::ServiceOptions opt;
  if (snapshot_dir) opt.snapshot_dir = *snapshot_dir;
  draft::service::SessionManager manager(opt);
  httplib::Server server;
  draft::service::register_routes(server, manager, static_dir);
  out << "listening on " << host << ":" << port << std::endl;
  if (!server.listen(host, port)) throw Error("cannot listen on port " + std::to_string(port));
  return ok;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Exact solver for the draft game (competitive assignment)", "draftgame"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  detail::SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "exact score and optimal move");
  solve_cmd->add_option("file", sa.path, "instance or position JSON ('-' = stdin)");
  solve_cmd->add_option("--threshold", sa.threshold,
                        "decide score >= s (exit 0 YES, 1 NO)");
  solve_cmd->add_flag("--pv", sa.pv, "print a principal variation");
  solve_cmd->add_flag("--no-prune", sa.no_prune,
                      "general search without pruning rules or alpha-beta");
  solve_cmd->add_option("--budget", sa.budget, "node budget");
  solve_cmd->add_option("--method", sa.method, "auto, search, otp-linear or otp-xp")
      ->check(CLI::IsMember({"auto", "search", "otp-linear", "otp-xp"}));
  add_format(solve_cmd);

  std::string check_path = "-";
  auto* check_cmd = app.add_subcommand("check", "compare every method with the oracle");
  check_cmd->add_option("file", check_path, "instance or position JSON");
  add_format(check_cmd);

  std::size_t gen_n = 6, gen_t = 2;
  std::int64_t gen_max = 10;
  std::uint64_t seed = 1;
  bool gen_otp = false;
  std::optional<std::string> gen_out;
  auto* gen_cmd = app.add_subcommand("generate", "random instance");
  gen_cmd->add_option("-n,--agents", gen_n, "number of agents")->check(CLI::Range(0, 64));
  gen_cmd->add_option("-t,--tasks", gen_t, "number of tasks")->check(CLI::Range(1, 1000));
  gen_cmd->add_option("--max-eff", gen_max, "efficiencies uniform in [0, max]")
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_flag("--otp", gen_otp, "one nonzero efficiency per agent");
  gen_cmd->add_option("-o,--output", gen_out, "write to file");

  std::string qbf_path = "-";
  std::optional<std::string> red_out, red_names;
  bool red_check = false;
  auto* red_cmd = app.add_subcommand("reduce", "QDIMACS formula to a draft instance");
  red_cmd->add_option("file", qbf_path, "QDIMACS file ('-' = stdin)");
  red_cmd->add_option("-o,--output", red_out, "instance file (sidecar <name>.names.json)");
  red_cmd->add_option("--names", red_names, "sidecar naming file");
  red_cmd->add_flag("--check", red_check, "solve and compare with the formula game");

  std::string suite = "all";
  std::uint64_t count = 0;
  auto* verify_cmd = app.add_subcommand("verify", "randomized cross-validation suites");
  std::vector<std::string> suite_choices = suites::suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("--suite", suite, "suite to run")->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--seed", seed, "base seed");
  verify_cmd->add_option("--count", count, "cases per suite (0 = default)");
  add_format(verify_cmd);

  std::vector<std::size_t> bench_tasks{2, 3}, bench_sizes{20, 40, 80, 160};
  int repeats = 3;
  auto* bench_cmd = app.add_subcommand("bench", "scaling of the one-trick DP");
  bench_cmd->add_option("--tasks", bench_tasks, "task counts")->delimiter(',');
  bench_cmd->add_option("--sizes", bench_sizes, "agent counts")->delimiter(',');
  bench_cmd->add_option("--seed", seed, "base seed");
  bench_cmd->add_option("--repeats", repeats, "runs per point (fastest kept)")
      ->check(CLI::PositiveNumber);
  add_format(bench_cmd);

  std::string play_path, side = "alice";
  std::optional<std::string> save;
  std::optional<std::uint64_t> play_budget;
  auto* play_cmd = app.add_subcommand("play", "line-mode game against the engine");
  play_cmd->add_option("file", play_path, "instance or position JSON")->required();
  play_cmd->add_option("--side", side, "your side")->check(CLI::IsMember({"alice", "bob"}));
  play_cmd->add_option("--save", save, "position file written on quit");
  play_cmd->add_option("--budget", play_budget, "engine node budget");

  std::string host = "0.0.0.0";
  int port = draft::service::port_from_env();
  std::optional<std::string> snapshot_dir, static_dir;
  auto* serve_cmd = app.add_subcommand("serve", "HTTP service for live drafts");
  serve_cmd->add_option("--host", host, "bind address");
  serve_cmd->add_option("--port", port, "port (default $DRAFTGAME_PORT or 8080)")
      ->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--snapshot-dir", snapshot_dir, "persist sessions here");
  serve_cmd->add_option("--static-dir", static_dir, "serve a built UI from here");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : error;
  }

  try {
    if (*solve_cmd) {
      sa.format = format;
      return detail::cmd_solve(sa, in, out, err);
    }
    if (*check_cmd) return detail::cmd_check(check_path, format, in, out);
    if (*gen_cmd) {
      const auto g = gen_otp ? oracle::random_otp_instance<Integer>(gen_n, gen_t, gen_max, seed)
                             : oracle::random_instance<Integer>(gen_n, gen_t, gen_max, seed);
      const std::string text = serialize_instance(g, 2) + "\n";
      if (gen_out) {
        detail::write_file(*gen_out, text);
      } else {
        out << text;
      }
      return ok;
    }
    if (*red_cmd) {
      return detail::cmd_reduce(qbf_path, red_out, red_names, red_check, in, out, err);
    }
    if (*verify_cmd) return detail::cmd_verify(suite, seed, count, format, out);
    if (*bench_cmd) {
      return detail::cmd_bench(bench_tasks, bench_sizes, seed, repeats, format, out);
    }
    if (*play_cmd) return detail::cmd_play(play_path, side, save, play_budget, in, out);
    if (*serve_cmd) return detail::cmd_serve(host, port, snapshot_dir, static_dir, out);
  } catch (const ParseError& e) {
    detail::print_error(err, format, out, "parse_error", e.what());
    return error;
  } catch (const GuardError& e) {
    detail::print_error(err, format, out, "guard", e.what());
    return error;
  } catch (const std::exception& e) {
    detail::print_error(err, format, out, "error", e.what());
    return error;
  }
  return error;
}

}  // namespace draft::cli

#endif  // DRAFTGAME_CLI_HPP_
