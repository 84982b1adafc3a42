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

// Live drafts over HTTP: a human plays one side, the engine the other.
//
//   POST /instances                 register an instance document
//   POST /sessions                  {"instance_id" | "instance", "human_side",
//                                    "policy": "exact" | "budgeted"}
//   GET  /sessions/{id}
//   POST /sessions/{id}/moves       {"agent": "<id>"}
//   GET  /sessions/{id}/hints
//   GET  /sessions/{id}/whatif?agent=<id>
//   GET  /healthz
//
// SessionManager holds all state and is usable without the HTTP layer.
// Requests on one session are serialized by that session's mutex; hints and
// what-ifs work on a copy of the position taken under it. With the budgeted
// policy, an engine reply that exceeds its node budget is finished on a
// background thread while the session reports "engine_thinking".

#ifndef DRAFTGAME_SERVICE_HPP_
#define DRAFTGAME_SERVICE_HPP_

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>

#include "draftgame/core.hpp"
#include "draftgame/engine.hpp"
#include "draftgame/io.hpp"
#include "draftgame/matching.hpp"
#include "draftgame/solver.hpp"

namespace draft::service {

// An error with its HTTP status and a stable machine-readable code.
class ApiError : public Error {
 public:
  ApiError(int status, std::string code, const std::string& message)
      : Error(message), status_(status), code_(std::move(code)) {}
  int status() const noexcept { return status_; }
  const std::string& code() const noexcept { return code_; }

 private:
  int status_;
  std::string code_;
};

enum class Status { awaiting_human, engine_thinking, finished };
enum class Policy { exact, budgeted };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::awaiting_human:
      return "awaiting_human";
    case Status::engine_thinking:
      return "engine_thinking";
    case Status::finished:
      return "finished";
  }
  return "?";
}

inline std::string_view to_string(Policy p) {
  return p == Policy::exact ? "exact" : "budgeted";
}

struct ServiceOptions {
  std::uint64_t engine_budget = 200000;  // nodes per synchronous reply
  std::uint64_t hint_budget = 2000000;   // nodes per hint / what-if value
  std::optional<std::filesystem::path> snapshot_dir;
};

struct MoveRecord {
  Player player;
  std::size_t agent;
  bool by_engine;
};

struct Session {
  std::string id;
  Position start;
  Position position;
  Player human = Player::alice;
  Policy policy = Policy::exact;
  std::vector<MoveRecord> log;
  Status status = Status::awaiting_human;
  std::optional<Integer> final;
  std::optional<std::size_t> last_engine_move;
};

namespace detail {

inline json error_body(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

// Engine's pick at `p`; throws BudgetExceeded when `budget` runs out.
inline std::size_t engine_pick(const Position& p,
                               std::optional<std::uint64_t> budget) {
  EngineOptions opt;
  opt.search.node_budget = budget;
  auto best = with_best_integers(p, [&](const auto& q) {
    return analyze(q, opt).best_move;
  });
  if (!best) throw Error("internal: no move at a non-terminal position");
  return *best;
}

struct MoveValue {
  Integer lower, upper;
};

inline std::vector<std::pair<std::size_t, MoveValue>> move_values(
    const Position& p, std::uint64_t budget) {
  SolveOptions opt;
  opt.node_budget = budget;
  return with_best_integers(p, [&](const auto& q) {
    std::vector<std::pair<std::size_t, MoveValue>> out;
    for (const auto& e : evaluate_moves(q, opt)) {
      out.push_back({e.agent, {Integer(e.lower), Integer(e.upper)}});
    }
    return out;
  });
}

inline MoveValue child_value(const Position& child, std::uint64_t budget) {
  if (child.is_terminal()) {
    const Integer v = final_score(child);
    return {v, v};
  }
  SolveOptions opt;
  opt.node_budget = budget;
  return with_best_integers(child, [&](const auto& q) -> MoveValue {
    using Int = typename std::decay_t<decltype(q.instance())>::value_type;
    try {
      const Integer v(solve(q, opt).score);
      return {v, v};
    } catch (const BudgetExceededWithBounds<Int>& e) {
      return {Integer(e.lower()), Integer(e.upper())};
    }
  });
}

}  // namespace detail

class SessionManager {
 public:
  explicit SessionManager(ServiceOptions options = {})
      : options_(std::move(options)), rng_(std::random_device{}()) {
    if (options_.snapshot_dir) {
      std::filesystem::create_directories(*options_.snapshot_dir);
      load_snapshots();
    }
  }

  ~SessionManager() {
    // Workers lock their session; let them finish before members go away.
    std::vector<std::shared_ptr<Slot>> slots;
    {
      std::lock_guard lock(mutex_);
      for (auto& [id, slot] : sessions_) slots.push_back(slot);
    }
    for (auto& slot : slots) {
      if (slot->worker.joinable()) slot->worker.join();
    }
  }

  SessionManager(const SessionManager&) = delete;
  SessionManager& operator=(const SessionManager&) = delete;

  json add_instance(const json& doc) {
    Instance g = parse_or_throw(doc);
    json info = describe_instance(g);
    std::lock_guard lock(mutex_);
    const std::string id = fresh_id("inst-");
    instances_.emplace(id, std::move(g));
    info["id"] = id;
    return info;
  }

  json get_instance(const std::string& id) {
    std::lock_guard lock(mutex_);
    auto it = instances_.find(id);
    if (it == instances_.end()) {
      throw ApiError(404, "not_found", "no instance '" + id + "'");
    }
    json info = describe_instance(it->second);
    info["id"] = id;
    return info;
  }

  json create_session(const json& body) {
    if (!body.is_object()) {
      throw ApiError(400, "invalid_request", "body must be a JSON object");
    }
    Instance g;
    if (auto it = body.find("instance_id"); it != body.end()) {
      if (!it->is_string()) {
        throw ApiError(400, "invalid_request", "instance_id must be a string");
      }
      std::lock_guard lock(mutex_);
      auto found = instances_.find(it->get<std::string>());
      if (found == instances_.end()) {
        throw ApiError(404, "not_found",
                       "no instance '" + it->get<std::string>() + "'");
      }
      g = found->second;
    } else if (auto it2 = body.find("instance"); it2 != body.end()) {
      g = parse_or_throw(*it2);
    } else {
      throw ApiError(400, "invalid_request",
                     "either 'instance_id' or 'instance' is required");
    }
    if (g.size() > kMaxSearchAgents) {
      throw ApiError(422, "too_large",
                     "live sessions support at most " +
                         std::to_string(kMaxSearchAgents) + " agents");
    }
    auto session = std::make_shared<Slot>();
    Session& s = session->session;
    s.human = side_field(body, "human_side", Player::alice);
    s.policy = Policy::exact;
    if (auto it = body.find("policy"); it != body.end()) {
      if (*it == "exact") {
        s.policy = Policy::exact;
      } else if (*it == "budgeted") {
        s.policy = Policy::budgeted;
      } else {
        throw ApiError(400, "invalid_request",
                       "policy must be \"exact\" or \"budgeted\"");
      }
    }
    s.start = Position(std::move(g));
    s.position = s.start;
    {
      std::lock_guard lock(mutex_);
      s.id = fresh_id("");
      sessions_.emplace(s.id, session);
    }
    std::unique_lock lock(session->mutex);
    advance(session, lock);
    return render(s);
  }

  json get_session(const std::string& id) {
    auto slot = find(id);
    std::lock_guard lock(slot->mutex);
    return render(slot->session);
  }

  json submit_move(const std::string& id, const json& body) {
    auto slot = find(id);
    std::unique_lock lock(slot->mutex);
    Session& s = slot->session;
    if (!body.is_object() || !body.contains("agent") || !body["agent"].is_string()) {
      throw ApiError(400, "invalid_request", "body must be {\"agent\": \"<id>\"}");
    }
    const std::string agent_id = body["agent"].get<std::string>();
    require_human_turn(s);
    const std::size_t agent = free_agent(s, agent_id);
    s.position.play(agent);
    s.log.push_back({s.human, agent, false});
    s.last_engine_move.reset();
    advance(slot, lock);
    json out = render(s);
    out["human_move"] = agent_id;
    out["engine_move"] = s.last_engine_move
                             ? json(s.position.instance().agent(*s.last_engine_move).id)
                             : json(nullptr);
    return out;
  }

  json hints(const std::string& id) {
    Position p = snapshot_for_human(id);
    const auto& g = p.instance();
    const auto values = detail::move_values(p, options_.hint_budget);

    const auto dominating = dominating_agents(p);
    const auto pair = find_dominating_pair(p);
    const auto free = p.free_agents();
    auto strictly_dominated = [&](std::size_t y) {
      for (auto x : free) {
        if (x == y) continue;
        bool geq = true, differs = false;
        for (std::size_t k = 0; k < g.tasks(); ++k) {
          geq = geq && g.eff(x, k) >= g.eff(y, k);
          differs = differs || g.eff(x, k) != g.eff(y, k);
        }
        if (geq && differs) return true;
      }
      return false;
    };

    const bool maximize = p.to_move() == Player::alice;
    bool all_exact = true;
    std::optional<Integer> best;
    for (const auto& [agent, v] : values) {
      all_exact = all_exact && v.lower == v.upper;
      if (v.lower == v.upper &&
          (!best || (maximize ? v.lower > *best : v.lower < *best))) {
        best = v.lower;
      }
    }
    json moves = json::array();
    json best_ids = json::array();
    for (const auto& [agent, v] : values) {
      json badges = json::array();
      if (std::find(dominating.begin(), dominating.end(), agent) != dominating.end()) {
        badges.push_back("dominating");
      }
      if (strictly_dominated(agent)) badges.push_back("dominated");
      if (pair && (pair->first == agent || pair->second == agent)) {
        badges.push_back("pair");
      }
      json m = {{"agent", g.agent(agent).id},
                {"exact", v.lower == v.upper},
                {"badges", std::move(badges)}};
      if (v.lower == v.upper) {
        m["value"] = json_integer(v.lower);
        if (all_exact && v.lower == *best) best_ids.push_back(g.agent(agent).id);
      } else {
        m["value"] = nullptr;
        m["lower"] = json_integer(v.lower);
        m["upper"] = json_integer(v.upper);
      }
      moves.push_back(std::move(m));
    }
    json out = {{"session", id},
                {"to_move", std::string(draft::to_string(p.to_move()))},
                {"exact", all_exact},
                {"moves", std::move(moves)},
                {"best", std::move(best_ids)}};
    out["value"] = all_exact && best ? json_integer(*best) : json(nullptr);
    return out;
  }

  json what_if(const std::string& id, const std::string& agent_id) {
    Position p;
    {
      auto slot = find(id);
      std::lock_guard lock(slot->mutex);
      p = slot->session.position;
      if (p.is_terminal()) {
        throw ApiError(409, "session_finished", "the draft is over");
      }
      free_agent(slot->session, agent_id);
    }
    const auto agent = *p.instance().index_of(agent_id);
    const auto v = detail::child_value(p.after(agent), options_.hint_budget);
    json out = {{"session", id},
                {"agent", agent_id},
                {"player", std::string(draft::to_string(p.to_move()))},
                {"exact", v.lower == v.upper}};
    if (v.lower == v.upper) {
      out["value"] = json_integer(v.lower);
    } else {
      out["value"] = nullptr;
      out["lower"] = json_integer(v.lower);
      out["upper"] = json_integer(v.upper);
    }
    return out;
  }

  std::size_t session_count() {
    std::lock_guard lock(mutex_);
    return sessions_.size();
  }

  // Blocks until the session is not engine_thinking (tests, shutdown).
  void wait_idle(const std::string& id) {
    auto slot = find(id);
    for (;;) {
      {
        std::lock_guard lock(slot->mutex);
        if (slot->session.status != Status::engine_thinking) return;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
  }

 private:
  struct Slot {
    std::mutex mutex;
    Session session;
    std::thread worker;
  };

  static Instance parse_or_throw(const json& doc) {
    try {
      return instance_from_json<Integer>(doc);
    } catch (const ParseError& e) {
      throw ApiError(400, "invalid_instance", e.what());
    } catch (const PreconditionError& e) {
      throw ApiError(400, "invalid_instance", e.what());
    }
  }

  static json describe_instance(const Instance& g) {
    return {{"instance", instance_to_json(g)},
            {"tasks", g.tasks()},
            {"agents", g.size()},
            {"otp", is_otp_instance(g).has_value()},
            {"upper_bound", json_integer(score_upper_bound(g))}};
  }

  static Player side_field(const json& body, const char* key, Player fallback) {
    auto it = body.find(key);
    if (it == body.end()) return fallback;
    std::optional<Player> p;
    if (it->is_string()) p = player_from_string(it->get_ref<const std::string&>());
    if (!p) {
      throw ApiError(400, "invalid_request",
                     std::string(key) + " must be \"alice\" or \"bob\"");
    }
    return *p;
  }

  std::string fresh_id(const std::string& prefix) {
    std::ostringstream out;
    out << prefix << std::hex << rng_();
    return out.str();
  }

  std::shared_ptr<Slot> find(const std::string& id) {
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) {
      throw ApiError(404, "not_found", "no session '" + id + "'");
    }
    return it->second;
  }

  static void require_human_turn(const Session& s) {
    if (s.status == Status::finished) {
      throw ApiError(409, "session_finished", "the draft is over");
    }
    if (s.status == Status::engine_thinking) {
      throw ApiError(409, "engine_thinking", "the engine is still choosing");
    }
    if (s.position.to_move() != s.human) {
      throw ApiError(409, "not_your_turn", "it is the engine's turn");
    }
  }

  static std::size_t free_agent(const Session& s, const std::string& agent_id) {
    auto idx = s.position.instance().index_of(agent_id);
    if (!idx) {
      throw ApiError(400, "unknown_agent", "no agent '" + agent_id + "'");
    }
    if (!s.position.is_free(*idx)) {
      throw ApiError(409, "agent_taken",
                     "agent '" + agent_id + "' is already picked");
    }
    return *idx;
  }

  Position snapshot_for_human(const std::string& id) {
    auto slot = find(id);
    std::lock_guard lock(slot->mutex);
    require_human_turn(slot->session);
    return slot->session.position;
  }

  // Lets the engine move while it is its turn; finishes the session at the
  // end. Caller holds `lock` on slot->mutex.
  void advance(const std::shared_ptr<Slot>& slot,
               std::unique_lock<std::mutex>& lock) {
    Session& s = slot->session;
    while (!s.position.is_terminal() && s.position.to_move() != s.human) {
      std::optional<std::uint64_t> budget;
      if (s.policy == Policy::budgeted) budget = options_.engine_budget;
      try {
        play_engine(s, detail::engine_pick(s.position, budget));
      } catch (const BudgetExceeded&) {
        s.status = Status::engine_thinking;
        persist(s);
        start_worker(slot, lock);
        return;
      }
    }
    settle(s);
    persist(s);
  }

  static void play_engine(Session& s, std::size_t agent) {
    s.log.push_back({s.position.to_move(), agent, true});
    s.position.play(agent);
    s.last_engine_move = agent;
  }

  static void settle(Session& s) {
    if (s.position.is_terminal()) {
      s.status = Status::finished;
      s.final = final_score(s.position);
    } else {
      s.status = Status::awaiting_human;
    }
  }

  void start_worker(const std::shared_ptr<Slot>& slot,
                    std::unique_lock<std::mutex>& lock) {
    if (slot->worker.joinable()) slot->worker.join();  // finished earlier
    const Position snapshot = slot->session.position;
    (void)lock;
    slot->worker = std::thread([this, slot, snapshot] {
      std::optional<std::size_t> pick;
      try {
        pick = detail::engine_pick(snapshot, std::nullopt);
      } catch (const std::exception&) {
      }
      std::lock_guard guard(slot->mutex);
      Session& s = slot->session;
      if (pick && s.position == snapshot) play_engine(s, *pick);
      settle(s);
      persist(s);
    });
  }

  json render(const Session& s) const {
    const auto& g = s.position.instance();
    json agents = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
      json eff = json::array();
      for (const auto& e : g.agent(i).eff) eff.push_back(json_integer(e));
      const Owner o = s.position.owner(i);
      agents.push_back({{"id", g.agent(i).id},
                        {"eff", std::move(eff)},
                        {"owner", o == Owner::none    ? json(nullptr)
                                  : o == Owner::alice ? json("alice")
                                                      : json("bob")}});
    }
    json log = json::array();
    for (std::size_t k = 0; k < s.log.size(); ++k) {
      log.push_back({{"ply", k + 1},
                     {"player", std::string(draft::to_string(s.log[k].player))},
                     {"agent", g.agent(s.log[k].agent).id},
                     {"by", s.log[k].by_engine ? "engine" : "human"}});
    }
    json provisional = json::object(), assignment = json::object();
    Integer values[2];
    for (Player side : {Player::alice, Player::bob}) {
      const auto picks = s.position.picked(side);
      const std::span<const std::size_t> members(picks);
      const Integer v = assignment_value(g, members);
      values[static_cast<int>(side)] = v;
      const std::string name(draft::to_string(side));
      provisional[name] = json_integer(v);
      json rows = json::array();
      const auto matched = optimal_assignment(g, members);
      for (std::size_t k = 0; k < matched.size(); ++k) {
        if (matched[k]) rows.push_back({{"task", k}, {"agent", g.agent(*matched[k]).id}});
      }
      assignment[name] = std::move(rows);
    }
    provisional["score"] = json_integer(Integer(values[0] - values[1]));
    json out = {
        {"id", s.id},
        {"status", std::string(to_string(s.status))},
        {"human_side", std::string(draft::to_string(s.human))},
        {"engine_side", std::string(draft::to_string(opponent(s.human)))},
        {"policy", std::string(to_string(s.policy))},
        {"to_move", s.position.is_terminal()
                        ? json(nullptr)
                        : json(std::string(draft::to_string(s.position.to_move())))},
        {"tasks", g.tasks()},
        {"agents", std::move(agents)},
        {"move_log", std::move(log)},
        {"provisional", std::move(provisional)},
        {"assignment", std::move(assignment)},
        {"final", s.final ? json_integer(*s.final) : json(nullptr)},
        {"last_engine_move", s.last_engine_move
                                 ? json(g.agent(*s.last_engine_move).id)
                                 : json(nullptr)}};
    if (g.scale() != 1) out["scale"] = json_integer(g.scale());
    return out;
  }

  // Snapshots: the start position and the move log; replay restores the rest.
  void persist(const Session& s) const {
    if (!options_.snapshot_dir) return;
    json moves = json::array();
    for (const auto& m : s.log) {
      moves.push_back({{"agent", s.start.instance().agent(m.agent).id},
                       {"by", m.by_engine ? "engine" : "human"}});
    }
    const json doc = {{"id", s.id},
                      {"human_side", std::string(draft::to_string(s.human))},
                      {"policy", std::string(to_string(s.policy))},
                      {"start", position_to_json(s.start)},
                      {"moves", std::move(moves)}};
    const auto path = *options_.snapshot_dir / (s.id + ".json");
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << doc.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
  }

  void load_snapshots() {
    for (const auto& entry :
         std::filesystem::directory_iterator(*options_.snapshot_dir)) {
      if (entry.path().extension() != ".json") continue;
      std::ifstream in(entry.path());
      std::stringstream text;
      text << in.rdbuf();
      auto slot = std::make_shared<Slot>();
      Session& s = slot->session;
      try {
        const json doc = json::parse(text.str());
        s.id = doc.at("id").get<std::string>();
        s.human = *player_from_string(doc.at("human_side").get<std::string>());
        s.policy = doc.at("policy") == "budgeted" ? Policy::budgeted : Policy::exact;
        s.start = position_from_json<Integer>(doc.at("start"));
        s.position = s.start;
        for (const auto& m : doc.at("moves")) {
          const auto agent =
              *s.start.instance().index_of(m.at("agent").get<std::string>());
          const bool engine = m.at("by") == "engine";
          s.log.push_back({s.position.to_move(), agent, engine});
          s.position.play(agent);
          if (engine) s.last_engine_move = agent;
        }
      } catch (const std::exception&) {
        continue;  // unreadable snapshot: skip it
      }
      sessions_.emplace(s.id, slot);
      std::unique_lock lock(slot->mutex);
      advance(slot, lock);
    }
  }

  ServiceOptions options_;
  std::mutex mutex_;
  std::mt19937_64 rng_;
  std::map<std::string, Instance> instances_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
};

// Wires the routes onto `server`. `static_dir`, when given, is served at /.
inline void register_routes(httplib::Server& server, SessionManager& manager,
                            const std::optional<std::string>& static_dir = {}) {
  auto respond = [](httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(body.dump(), "application/json");
  };
  auto guarded = [respond](auto&& handler, int ok_status = 200) {
    return [respond, handler, ok_status](const httplib::Request& req,
                                         httplib::Response& res) {
      try {
        respond(res, ok_status, handler(req));
      } catch (const ApiError& e) {
        respond(res, e.status(), detail::error_body(e.code(), e.what()));
      } catch (const json::exception& e) {
        respond(res, 400, detail::error_body("invalid_request", e.what()));
      } catch (const GuardError& e) {
        respond(res, 422, detail::error_body("too_large", e.what()));
      } catch (const std::exception& e) {
        respond(res, 500, detail::error_body("internal", e.what()));
      }
    };
  };
  auto body_json = [](const httplib::Request& req) {
    try {
      return json::parse(req.body);
    } catch (const json::parse_error& e) {
      throw ApiError(400, "invalid_json",
                     "malformed JSON at byte " + std::to_string(e.byte));
    }
  };

  server.Get("/healthz", guarded([](const httplib::Request&) {
               return json{{"status", "ok"}};
             }));
  server.Post("/instances", guarded([&manager, body_json](const httplib::Request& req) {
                return manager.add_instance(body_json(req));
              }, 201));
  server.Get(R"(/instances/([^/]+))", guarded([&manager](const httplib::Request& req) {
               return manager.get_instance(req.matches[1]);
             }));
  server.Post("/sessions", guarded([&manager, body_json](const httplib::Request& req) {
                return manager.create_session(body_json(req));
              }, 201));
  server.Get(R"(/sessions/([^/]+))", guarded([&manager](const httplib::Request& req) {
               return manager.get_session(req.matches[1]);
             }));
  server.Post(R"(/sessions/([^/]+)/moves)",
              guarded([&manager, body_json](const httplib::Request& req) {
                return manager.submit_move(req.matches[1], body_json(req));
              }));
  server.Get(R"(/sessions/([^/]+)/hints)", guarded([&manager](const httplib::Request& req) {
               return manager.hints(req.matches[1]);
             }));
  server.Get(R"(/sessions/([^/]+)/whatif)",
             guarded([&manager](const httplib::Request& req) {
               if (!req.has_param("agent")) {
                 throw ApiError(400, "invalid_request",
                                "query parameter 'agent' is required");
               }
               return manager.what_if(req.matches[1], req.get_param_value("agent"));
             }));
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  if (static_dir) server.set_mount_point("/", *static_dir);
}

inline int port_from_env(int fallback = 8080) {
  if (const char* v = std::getenv("DRAFTGAME_PORT")) {
    char* end = nullptr;
    const long port = std::strtol(v, &end, 10);
    if (*end == '\0' && port > 0 && port < 65536) return static_cast<int>(port);
  }
  return fallback;
}

}  // namespace draft::service

#endif  // DRAFTGAME_SERVICE_HPP_
