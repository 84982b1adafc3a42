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

// JSON documents for instances and positions.
//
//   {"tasks": 2,
//    "agents": [{"id": "x", "eff": [4, 7]},
//               {"id": "big", "eff_str": ["123456789012345678901234", "0"]}],
//    "threshold": 3}
//
// "eff" holds JSON integers; "eff_str" holds base-10 strings of any length,
// optionally with a fractional part. Fractions are cleared by multiplying
// every efficiency (and the threshold) by 10^D, D being the most decimals
// seen, and the factor is recorded as "scale". Position files add
// "picked_a"/"picked_b" (agent ids) and "to_move".
//
// Errors are ParseError with a JSON pointer to the offending value.

#ifndef DRAFTGAME_IO_HPP_
#define DRAFTGAME_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "draftgame/core.hpp"

namespace draft {

using json = nlohmann::json;

namespace detail {

// A decimal "digits[.digits]" split into its integer value and the number of
// fractional digits.
struct Decimal {
  Integer digits;
  std::size_t decimals = 0;
};

inline Decimal parse_decimal(std::string_view s, const std::string& where) {
  if (s.empty()) throw ParseError(where, "empty number string");
  std::string digits;
  std::size_t decimals = 0;
  bool dot = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '.' && !dot && i > 0 && i + 1 < s.size()) {
      dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (dot) ++decimals;
    } else if (c == '-') {
      throw ParseError(where, "efficiencies must be nonnegative");
    } else {
      throw ParseError(where, "'" + std::string(s) +
                                  "' is not a nonnegative decimal number");
    }
  }
  // cpp_int reads a leading 0 as an octal prefix.
  const auto first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  return {Integer(digits), decimals};
}

inline Integer pow10(std::size_t e) {
  Integer r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 10;
  return r;
}

inline Decimal read_number(const json& v, const std::string& where,
                           bool allow_string) {
  if (v.is_number_unsigned()) return {Integer(v.get<std::uint64_t>()), 0};
  if (v.is_number_integer()) {
    const auto x = v.get<std::int64_t>();
    if (x < 0) throw ParseError(where, "efficiencies must be nonnegative");
    return {Integer(x), 0};
  }
  if (v.is_number_float()) {
    throw ParseError(where,
                     "expected an integer within 64 bits; use a decimal "
                     "string (eff_str) for fractions or larger values");
  }
  if (allow_string && v.is_string()) {
    return parse_decimal(v.get_ref<const std::string&>(), where);
  }
  throw ParseError(where, allow_string ? "expected an integer or a string"
                                       : "expected an integer");
}

inline const json& require(const json& obj, const char* key,
                           const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(where, std::string("missing field '") + key + "'");
  }
  return *it;
}

inline json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

template <class Int>
Int scaled(const Decimal& d, std::size_t decimals, const std::string& where) {
  Integer v = d.digits * pow10(decimals - d.decimals);
  try {
    return integer_cast<Int>(v);
  } catch (const PreconditionError& e) {
    throw ParseError(where, e.what());
  }
}

}  // namespace detail

// A JSON value for an exact integer: a number when it is exactly
// representable as a double (|v| < 2^53), otherwise its decimal string.
template <class Int>
json json_integer(const Int& v) {
  static const Integer limit = Integer(1) << 53;
  const Integer big(v);
  if (big < limit && -big < limit) return json(static_cast<std::int64_t>(big));
  return json(big.str());
}

template <class Int = Integer>
BasicInstance<Int> instance_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("", "document must be an object");
  const json& tasks_v = detail::require(doc, "tasks", "");
  if (!tasks_v.is_number_integer() || tasks_v.get<std::int64_t>() < 0) {
    throw ParseError("/tasks", "expected a nonnegative integer");
  }
  const auto tasks = static_cast<std::size_t>(tasks_v.get<std::int64_t>());
  const json& agents_v = detail::require(doc, "agents", "");
  if (!agents_v.is_array()) throw ParseError("/agents", "expected an array");

  struct Row {
    std::string id;
    std::vector<detail::Decimal> eff;
  };
  std::vector<Row> rows;
  std::size_t decimals = 0;
  std::vector<std::string> where;  // pointers, for range errors after scaling
  for (std::size_t i = 0; i < agents_v.size(); ++i) {
    const std::string at = "/agents/" + std::to_string(i);
    const json& a = agents_v[i];
    if (!a.is_object()) throw ParseError(at, "expected an object");
    const json& id = detail::require(a, "id", at);
    if (!id.is_string() || id.get_ref<const std::string&>().empty()) {
      throw ParseError(at + "/id", "expected a non-empty string");
    }
    const bool has_eff = a.contains("eff"), has_str = a.contains("eff_str");
    if (has_eff == has_str) {
      throw ParseError(at, "exactly one of 'eff' and 'eff_str' is required");
    }
    const char* key = has_eff ? "eff" : "eff_str";
    const json& eff = a[key];
    const std::string eff_at = at + "/" + key;
    if (!eff.is_array()) throw ParseError(eff_at, "expected an array");
    if (eff.size() != tasks) {
      throw ParseError(eff_at, "has " + std::to_string(eff.size()) +
                                   " entries, expected " +
                                   std::to_string(tasks));
    }
    Row row{id.get<std::string>(), {}};
    for (std::size_t k = 0; k < eff.size(); ++k) {
      const std::string e_at = eff_at + "/" + std::to_string(k);
      if (has_str && !eff[k].is_string()) {
        throw ParseError(e_at, "expected a decimal string");
      }
      row.eff.push_back(detail::read_number(eff[k], e_at, has_str));
      decimals = std::max(decimals, row.eff.back().decimals);
    }
    for (const auto& prev : rows) {
      if (prev.id == row.id) {
        throw ParseError(at + "/id", "duplicate agent id '" + row.id + "'");
      }
    }
    rows.push_back(std::move(row));
    where.push_back(eff_at);
  }

  std::optional<detail::Decimal> threshold;
  if (auto it = doc.find("threshold"); it != doc.end()) {
    if (it->is_number_integer() && it->get<std::int64_t>() < 0) {
      // Negative thresholds are legal (positions may score below zero).
      threshold = detail::Decimal{Integer(it->get<std::int64_t>()), 0};
    } else {
      threshold = detail::read_number(*it, "/threshold", true);
      decimals = std::max(decimals, threshold->decimals);
    }
  }
  Integer scale = 1;
  if (auto it = doc.find("scale"); it != doc.end()) {
    const auto d = detail::read_number(*it, "/scale", true);
    if (d.decimals != 0 || d.digits <= 0) {
      throw ParseError("/scale", "expected a positive integer");
    }
    scale = d.digits;
  }
  scale *= detail::pow10(decimals);

  BasicInstance<Int> g(tasks);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Int> eff;
    eff.reserve(tasks);
    for (std::size_t k = 0; k < tasks; ++k) {
      eff.push_back(detail::scaled<Int>(rows[i].eff[k], decimals,
                                        where[i] + "/" + std::to_string(k)));
    }
    g.add_agent(std::move(rows[i].id), std::move(eff));
  }
  if (threshold) {
    g.set_threshold(detail::scaled<Int>(*threshold, decimals, "/threshold"));
  }
  g.set_scale(detail::scaled<Int>(detail::Decimal{scale, 0}, 0, "/scale"));
  return g;
}

template <class Int = Integer>
BasicInstance<Int> parse_instance(std::string_view text) {
  return instance_from_json<Int>(detail::parse_text(text));
}

// Canonical form: fields in the order tasks, agents, threshold, scale; each
// agent uses "eff" when every entry fits in 64 bits, "eff_str" otherwise.
// Optional fields are emitted only when set (scale only when != 1).
template <class Int>
json instance_to_json(const BasicInstance<Int>& g) {
  static const Integer max64(std::numeric_limits<std::int64_t>::max());
  json agents = json::array();
  for (const auto& a : g.agents()) {
    bool small = true;
    for (const auto& e : a.eff) small = small && Integer(e) <= max64;
    json eff = json::array();
    for (const auto& e : a.eff) {
      if (small) {
        eff.push_back(static_cast<std::int64_t>(Integer(e)));
      } else {
        eff.push_back(to_decimal(e));
      }
    }
    agents.push_back({{"id", a.id}, {small ? "eff" : "eff_str", std::move(eff)}});
  }
  json doc = {{"tasks", g.tasks()}, {"agents", std::move(agents)}};
  auto fits = [](const Int& v) {
    const Integer big(v);
    return big <= max64 && big >= -max64;
  };
  if (g.threshold()) {
    const auto& s = *g.threshold();
    doc["threshold"] = fits(s) ? json(static_cast<std::int64_t>(Integer(s)))
                               : json(to_decimal(s));
  }
  if (g.scale() != 1) {
    doc["scale"] = fits(g.scale())
                       ? json(static_cast<std::int64_t>(Integer(g.scale())))
                       : json(to_decimal(g.scale()));
  }
  return doc;
}

template <class Int>
std::string serialize_instance(const BasicInstance<Int>& g, int indent = -1) {
  return instance_to_json(g).dump(indent);
}

template <class Int = Integer>
BasicPosition<Int> position_from_json(const json& doc) {
  auto g = instance_from_json<Int>(doc);
  auto ids = [&](const char* key) {
    std::vector<std::size_t> out;
    auto it = doc.find(key);
    if (it == doc.end()) return out;
    const std::string at = std::string("/") + key;
    if (!it->is_array()) throw ParseError(at, "expected an array of agent ids");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& v = (*it)[i];
      const std::string v_at = at + "/" + std::to_string(i);
      if (!v.is_string()) throw ParseError(v_at, "expected an agent id");
      auto idx = g.index_of(v.get_ref<const std::string&>());
      if (!idx) throw ParseError(v_at, "unknown agent '" + v.get<std::string>() + "'");
      out.push_back(*idx);
    }
    return out;
  };
  const auto a = ids("picked_a");
  const auto b = ids("picked_b");
  Player to_move = a.size() > b.size() ? Player::bob : Player::alice;
  if (auto it = doc.find("to_move"); it != doc.end()) {
    std::optional<Player> p;
    if (it->is_string()) p = player_from_string(it->get_ref<const std::string&>());
    if (!p) throw ParseError("/to_move", "expected \"alice\" or \"bob\"");
    to_move = *p;
  }
  try {
    return BasicPosition<Int>::from_picks(std::move(g), a, b, to_move);
  } catch (const PreconditionError& e) {
    throw ParseError("", e.what());
  }
}

template <class Int = Integer>
BasicPosition<Int> parse_position(std::string_view text) {
  return position_from_json<Int>(detail::parse_text(text));
}

template <class Int>
json position_to_json(const BasicPosition<Int>& p) {
  json doc = instance_to_json(p.instance());
  for (Player side : {Player::alice, Player::bob}) {
    json ids = json::array();
    for (auto i : p.picked(side)) ids.push_back(p.instance().agent(i).id);
    doc[side == Player::alice ? "picked_a" : "picked_b"] = std::move(ids);
  }
  doc["to_move"] = std::string(to_string(p.to_move()));
  return doc;
}

template <class Int>
std::string serialize_position(const BasicPosition<Int>& p, int indent = -1) {
  return position_to_json(p).dump(indent);
}

}  // namespace draft

#endif  // DRAFTGAME_IO_HPP_
