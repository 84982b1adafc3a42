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

#ifndef DRAFTGAME_CORE_HPP_
#define DRAFTGAME_CORE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace draft {

// Default efficiency type. Gadget instances use 5^k chains that outgrow any
// machine word, so the library defaults to arbitrary precision; every
// algorithm is also instantiable on std::int64_t when values are known small.
using Integer = boost::multiprecision::cpp_int;

enum class Player : std::uint8_t { alice = 0, bob = 1 };

constexpr Player opponent(Player p) noexcept {
  return p == Player::alice ? Player::bob : Player::alice;
}

inline std::string_view to_string(Player p) noexcept {
  return p == Player::alice ? "alice" : "bob";
}

inline std::optional<Player> player_from_string(std::string_view s) {
  if (s == "alice" || s == "Alice" || s == "A") return Player::alice;
  if (s == "bob" || s == "Bob" || s == "B") return Player::bob;
  return std::nullopt;
}

// Error hierarchy. Everything the library throws derives from draft::Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed input document. `location` is a JSON pointer, a line number or a
// byte offset, depending on the format.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& message)
      : Error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

// An exhaustive routine refuses an input beyond its configured size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

// A search ran out of its node budget. The typed subclass carries the best
// bounds known on the value at the moment the budget fired.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t nodes, const std::string& message)
      : Error(message), nodes_(nodes) {}
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

template <class Int>
class BudgetExceededWithBounds : public BudgetExceeded {
 public:
  BudgetExceededWithBounds(std::uint64_t nodes, Int lower, Int upper)
      : BudgetExceeded(nodes, "node budget exceeded after " +
                                  std::to_string(nodes) + " nodes"),
        lower_(std::move(lower)),
        upper_(std::move(upper)) {}
  const Int& lower() const noexcept { return lower_; }
  const Int& upper() const noexcept { return upper_; }

 private:
  Int lower_;
  Int upper_;
};

template <class Int>
std::string to_decimal(const Int& v) {
  if constexpr (std::is_integral_v<Int>) {
    return std::to_string(v);
  } else {
    return v.str();
  }
}

// Lossless conversion between efficiency types; throws when the value does
// not fit the target.
template <class To, class From>
To integer_cast(const From& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else if constexpr (std::is_integral_v<To>) {
    Integer big(v);
    if (big > Integer(std::numeric_limits<To>::max()) ||
        big < Integer(std::numeric_limits<To>::min())) {
      throw PreconditionError("value " + big.str() + " does not fit in a " +
                              std::to_string(sizeof(To) * 8) + "-bit integer");
    }
    return static_cast<To>(big);
  } else {
    return To(v);
  }
}

template <class Int>
struct BasicAgent {
  std::string id;
  std::vector<Int> eff;

  // Largest single efficiency, i.e. the infinity norm (entries are >= 0).
  Int max_eff() const {
    Int best = 0;
    for (const auto& e : eff) best = std::max(best, e);
    return best;
  }

  friend bool operator==(const BasicAgent&, const BasicAgent&) = default;
};

// A multiset of agents over a fixed number of tasks. Agent ids are unique;
// efficiency vectors may repeat.
template <class Int>
class BasicInstance {
 public:
  using value_type = Int;
  using agent_type = BasicAgent<Int>;

  BasicInstance() = default;
  explicit BasicInstance(std::size_t tasks) : tasks_(tasks) {}
  BasicInstance(std::size_t tasks, std::vector<agent_type> agents)
      : tasks_(tasks) {
    agents_.reserve(agents.size());
    for (auto& a : agents) add_agent(std::move(a));
  }

  std::size_t tasks() const noexcept { return tasks_; }
  std::size_t size() const noexcept { return agents_.size(); }
  bool empty() const noexcept { return agents_.empty(); }
  const std::vector<agent_type>& agents() const noexcept { return agents_; }
  const agent_type& agent(std::size_t i) const { return agents_.at(i); }
  const Int& eff(std::size_t agent, std::size_t task) const {
    return agents_[agent].eff[task];
  }

  std::optional<std::size_t> index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  void add_agent(agent_type agent) {
    if (agent.id.empty()) throw PreconditionError("agent id must be non-empty");
    if (agent.eff.size() != tasks_) {
      throw PreconditionError("agent '" + agent.id + "' has " +
                              std::to_string(agent.eff.size()) +
                              " efficiencies, instance has " +
                              std::to_string(tasks_) + " tasks");
    }
    for (const auto& e : agent.eff) {
      if (e < 0) {
        throw PreconditionError("agent '" + agent.id +
                                "' has a negative efficiency");
      }
    }
    if (index_.count(agent.id) != 0) {
      throw PreconditionError("duplicate agent id '" + agent.id + "'");
    }
    index_.emplace(agent.id, agents_.size());
    agents_.push_back(std::move(agent));
  }

  void add_agent(std::string id, std::vector<Int> eff) {
    add_agent(agent_type{std::move(id), std::move(eff)});
  }

  // Decision threshold s of "is sc >= s?", when the document carries one.
  const std::optional<Int>& threshold() const noexcept { return threshold_; }
  void set_threshold(std::optional<Int> s) { threshold_ = std::move(s); }

  // Efficiencies were multiplied by `scale` at parse time to make them
  // integral; scores divide by it to recover the original units.
  const Int& scale() const noexcept { return scale_; }
  void set_scale(Int scale) {
    if (scale <= 0) throw PreconditionError("scale must be positive");
    scale_ = std::move(scale);
  }

  friend bool operator==(const BasicInstance& a, const BasicInstance& b) {
    return a.tasks_ == b.tasks_ && a.agents_ == b.agents_ &&
           a.threshold_ == b.threshold_ && a.scale_ == b.scale_;
  }

 private:
  std::size_t tasks_ = 0;
  std::vector<agent_type> agents_;
  std::unordered_map<std::string, std::size_t> index_;
  std::optional<Int> threshold_;
  Int scale_ = 1;
};

template <class To, class From>
BasicInstance<To> instance_cast(const BasicInstance<From>& in) {
  BasicInstance<To> out(in.tasks());
  for (const auto& a : in.agents()) {
    std::vector<To> eff;
    eff.reserve(a.eff.size());
    for (const auto& e : a.eff) eff.push_back(integer_cast<To>(e));
    out.add_agent(a.id, std::move(eff));
  }
  if (in.threshold()) out.set_threshold(integer_cast<To>(*in.threshold()));
  out.set_scale(integer_cast<To>(in.scale()));
  return out;
}

enum class Owner : std::uint8_t { none = 0, alice = 1, bob = 2 };

constexpr Owner owner_of(Player p) noexcept {
  return p == Player::alice ? Owner::alice : Owner::bob;
}

// An instance plus the agents each player has already picked. The player to
// move is derived from the pick counts and the starting player, so the
// alternation invariant holds by construction.
template <class Int>
class BasicPosition {
 public:
  using instance_type = BasicInstance<Int>;

  BasicPosition() = default;
  explicit BasicPosition(instance_type instance, Player first = Player::alice)
      : instance_(std::move(instance)),
        owner_(instance_.size(), Owner::none),
        first_(first) {}

  // Builds a position from explicit pick sets and the player to move,
  // inferring who started. Throws when the counts cannot arise from
  // alternating play.
  static BasicPosition from_picks(instance_type instance,
                                  const std::vector<std::size_t>& picked_a,
                                  const std::vector<std::size_t>& picked_b,
                                  Player to_move) {
    BasicPosition p(std::move(instance));
    for (auto i : picked_a) p.assign(i, Owner::alice);
    for (auto i : picked_b) p.assign(i, Owner::bob);
    const auto a = picked_a.size(), b = picked_b.size();
    if (a == b) {
      p.first_ = to_move;
    } else if (a == b + 1 && to_move == Player::bob) {
      p.first_ = Player::alice;
    } else if (b == a + 1 && to_move == Player::alice) {
      p.first_ = Player::bob;
    } else {
      throw PreconditionError(
          "pick counts (" + std::to_string(a) + ", " + std::to_string(b) +
          ") are inconsistent with " + std::string(to_string(to_move)) +
          " to move");
    }
    return p;
  }

  const instance_type& instance() const noexcept { return instance_; }
  Player first_player() const noexcept { return first_; }
  Owner owner(std::size_t agent) const { return owner_.at(agent); }
  bool is_free(std::size_t agent) const { return owner(agent) == Owner::none; }

  std::size_t num_picked() const noexcept { return picks_; }
  std::size_t num_free() const noexcept { return owner_.size() - picks_; }
  bool is_terminal() const noexcept { return num_free() == 0; }

  Player to_move() const noexcept {
    return picks_ % 2 == 0 ? first_ : opponent(first_);
  }

  std::vector<std::size_t> picked(Player p) const {
    std::vector<std::size_t> out;
    const Owner o = owner_of(p);
    for (std::size_t i = 0; i < owner_.size(); ++i) {
      if (owner_[i] == o) out.push_back(i);
    }
    return out;
  }

  std::vector<std::size_t> free_agents() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < owner_.size(); ++i) {
      if (owner_[i] == Owner::none) out.push_back(i);
    }
    return out;
  }

  // The player to move picks `agent`.
  void play(std::size_t agent) {
    if (agent >= owner_.size()) {
      throw PreconditionError("unknown agent index " + std::to_string(agent));
    }
    if (owner_[agent] != Owner::none) {
      throw PreconditionError("agent '" + instance_.agent(agent).id +
                              "' is already picked");
    }
    owner_[agent] = owner_of(to_move());
    ++picks_;
  }

  BasicPosition after(std::size_t agent) const {
    BasicPosition next = *this;
    next.play(agent);
    return next;
  }

  friend bool operator==(const BasicPosition& a, const BasicPosition& b) {
    return a.instance_ == b.instance_ && a.owner_ == b.owner_ &&
           a.first_ == b.first_;
  }

 private:
  void assign(std::size_t agent, Owner o) {
    if (agent >= owner_.size()) {
      throw PreconditionError("unknown agent index " + std::to_string(agent));
    }
    if (owner_[agent] != Owner::none) {
      throw PreconditionError("agent '" + instance_.agent(agent).id +
                              "' appears in both pick sets");
    }
    owner_[agent] = o;
    ++picks_;
  }

  instance_type instance_;
  std::vector<Owner> owner_;
  Player first_ = Player::alice;
  std::size_t picks_ = 0;
};

using Agent = BasicAgent<Integer>;
using Instance = BasicInstance<Integer>;
using Position = BasicPosition<Integer>;

// max over agents of the infinity norm; 0 for an empty instance. Bounds the
// optimal score of every starting position from above (it is >= 0 from below).
template <class Int>
Int score_upper_bound(const BasicInstance<Int>& instance) {
  Int best = 0;
  for (const auto& a : instance.agents()) best = std::max(best, a.max_eff());
  return best;
}

}  // namespace draft

#endif  // DRAFTGAME_CORE_HPP_
