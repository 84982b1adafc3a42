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

#include <gtest/gtest.h>

#include <string>

#include "draftgame/io.hpp"

namespace draft {
namespace {

std::string location_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.location();
  }
  return "<no error>";
}

TEST(Io, ParsesAndRoundTrips) {
  const auto g = parse_instance(
      R"({"tasks":2,"agents":[{"id":"p","eff":[4,7]},{"id":"q","eff":[5,5]}],"threshold":3})");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.eff(0, 1), 7);
  EXPECT_EQ(g.threshold(), Integer(3));
  EXPECT_EQ(parse_instance(serialize_instance(g)), g);
}

TEST(Io, ErrorsCarryJsonPointers) {
  EXPECT_EQ(location_of(R"({"agents":[]})"), "");
  EXPECT_EQ(location_of(R"({"tasks":2,"agents":[{"id":"a","eff":[1]}]})"),
            "/agents/0/eff");
  EXPECT_EQ(location_of(R"({"tasks":1,"agents":[{"id":"a","eff":[-1]}]})"),
            "/agents/0/eff/0");
  EXPECT_EQ(location_of(R"({"tasks":1,"agents":[{"id":"a","eff":[1.5]}]})"),
            "/agents/0/eff/0");
  EXPECT_EQ(location_of(R"({"tasks":1,"agents":[{"id":"a","eff":[1]},{"id":"a","eff":[2]}]})"),
            "/agents/1/id");
  EXPECT_EQ(location_of(R"({"tasks":1,"agents":[{"id":"a"}]})"), "/agents/0");
  EXPECT_EQ(location_of(R"({"tasks":1,)"), "byte 12");
}

TEST(Io, DecimalStringsAreRescaledExactly) {
  const auto g = parse_instance(
      R"({"tasks":2,"agents":[{"id":"a","eff_str":["1.5","2"]},{"id":"b","eff_str":["0.25","3"]}]})");
  EXPECT_EQ(g.scale(), 100);
  EXPECT_EQ(g.eff(0, 0), 150);
  EXPECT_EQ(g.eff(1, 0), 25);
  EXPECT_EQ(g.eff(1, 1), 300);
  // Leading zeros are decimal, not an octal prefix.
  const auto z = parse_instance(R"({"tasks":1,"agents":[{"id":"a","eff_str":["010"]}]})");
  EXPECT_EQ(z.eff(0, 0), 10);
  EXPECT_EQ(parse_instance(serialize_instance(g)), g);
}

TEST(Io, HugeValuesUseStrings) {
  const std::string big = "123456789012345678901234567890";
  const auto g = parse_instance(
      R"({"tasks":1,"agents":[{"id":"a","eff_str":[")" + big + R"("]}]})");
  EXPECT_EQ(g.eff(0, 0), Integer(big));
  const json doc = instance_to_json(g);
  EXPECT_EQ(doc["agents"][0]["eff_str"][0], big);
  EXPECT_EQ(parse_instance(doc.dump()), g);
  EXPECT_EQ(json_integer(Integer(1) << 53), json("9007199254740992"));
  EXPECT_EQ(json_integer(Integer((1LL << 53) - 1)), json((1LL << 53) - 1));
}

TEST(Io, PositionsRoundTrip) {
  const auto p = parse_position(
      R"({"tasks":2,"agents":[{"id":"p","eff":[4,7]},{"id":"q","eff":[5,5]},{"id":"r","eff":[0,4]}],
          "picked_a":["p"],"picked_b":[]})");
  EXPECT_EQ(p.to_move(), Player::bob);
  EXPECT_EQ(p.owner(0), Owner::alice);
  EXPECT_EQ(parse_position(serialize_position(p)), p);
  EXPECT_THROW(parse_position(R"({"tasks":1,"agents":[{"id":"p","eff":[1]}],"picked_a":["z"]})"),
               ParseError);
  EXPECT_THROW(parse_position(R"({"tasks":1,"agents":[{"id":"p","eff":[1]}],"to_move":"carol"})"),
               ParseError);
}

}  // namespace
}  // namespace draft
