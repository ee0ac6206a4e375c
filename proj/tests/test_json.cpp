// Copyright 2026 The lch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "lch/json_io.hpp"

using namespace lch;

TEST_CASE("rationals in JSON") {
  CHECK(rational_from_json(Json("3/6")) == Rational(1, 2));
  CHECK(rational_from_json(Json(4)) == Rational(4));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json(true)), ParseError);
  CHECK(to_json(Rational(-2, 6)) == Json("-1/3"));
  CHECK_THROWS_AS(parse_json("{"), ParseError);
}

TEST_CASE("polytope documents") {
  auto p = polytope_from_json(parse_json(R"({"dim":2,"facets":[{"normal":[1,0],"offset":"1"},
    {"normal":[0,1],"offset":1},{"normal":[-1,-1],"offset":"1"}]})"));
  CHECK(p.facets().size() == 3);
  CHECK(polytope_from_json(to_json(p)).sorted_facets() == p.sorted_facets());
  CHECK_THROWS_AS(polytope_from_json(parse_json(R"({"dim":2,"facets":[{"normal":[2,0],"offset":"1"}]})")),
                  ParseError);
  CHECK_THROWS_AS(polytope_from_json(parse_json(R"({"dim":1,"facets":[{"normal":[1],"offset":0.5}]})")),
                  ParseError);
  CHECK_THROWS_AS(polytope_from_json(parse_json(R"({"facets":[]})")), ParseError);

  auto verts = vertices_to_json(p);
  REQUIRE(verts.size() == 3);
  CHECK(verts[0]["point"] == Json::array({"-1", "-1"}));
}

TEST_CASE("fibered documents") {
  auto z = fibered_from_json(parse_json(R"({"base":{"name":"CP2","h2_rank":1},"tau_Z":"1","tau_Y":"3"})"));
  REQUIRE(z.components.size() == 1);
  CHECK(z.components[0].tau_y == Rational(3));
  auto again = fibered_from_json(to_json(z));
  CHECK(again.components[0].base.name == "CP2");
  CHECK(again.components[0].tau_z == Rational(1));
  CHECK_THROWS_AS(fibered_from_json(parse_json(R"({"base":{"name":"Y"},"tau_Z":"0"})")), ParseError);
}

TEST_CASE("building type documents") {
  const char* text = R"({"target":"symplectization",
    "vertices":[{"id":"a","kind":"disk","level":0},{"id":"b","kind":"disk","level":0}],
    "edges":[{"id":"e","ends":["a","b"],"class":"L","length":"broken","break_at":"crit","breakings":1},
      {"id":"x","ends":["a"],"class":"white-","label":"q1","action":"1/2"},
      {"id":"y","ends":["a"],"class":"L"},{"id":"z","ends":["b"],"class":"L"},{"id":"w","ends":["b"],"class":"L"}],
    "decorations":{"a":{"area":"1/2","chern":"0","y-":"1/2","y+":"0","maslov":"1"},
                   "b":{"area":"0","chern":"0","y-":"0","y+":"0"}}})";
  auto t = building_from_json(parse_json(text));
  CHECK(t.target == Target::Symplectization);
  CHECK(t.edges[0].break_at == std::string("crit"));
  CHECK(t.edges[1].action == Rational(1, 2));
  CHECK(t.decorations->at("a").maslov == Rational(1));
  auto back = building_from_json(to_json(t));
  CHECK(canonical_form(back) == canonical_form(t));

  CHECK_THROWS_AS(building_from_json(parse_json(R"({"vertices":[{"id":"a","kind":"blob","level":0}],"edges":[]})")),
                  ParseError);
  CHECK_THROWS_AS(building_from_json(parse_json(R"({"vertices":[{"id":"a","kind":"disk","level":0}],
    "edges":[{"id":"e","ends":["a"],"class":"L","breakings":1}]})")),
                  ParseError);
  CHECK_THROWS_AS(building_from_json(parse_json(R"({"vertices":[{"id":"a","kind":"disk","level":0}],
    "edges":[{"id":"e","ends":["a"],"class":"white-","action":0.5}]})")),
                  ParseError);

  for (const auto& lib : enumerate_types({3, 4, true, true})) {
    CHECK(canonical_form(building_from_json(to_json(lib))) == canonical_form(lib));
  }
}

TEST_CASE("cobordism documents") {
  for (const auto& name : builtin_cobordism_names()) {
    auto d = builtin_cobordism(name, 4);
    auto back = cobordism_from_json(to_json(d));
    auto a = check_tame(d), b = check_tame(back);
    CHECK(to_json(a) == to_json(b));
  }
  CHECK_THROWS_AS(cobordism_from_json(parse_json(R"({"classes":[]})")), ParseError);
  auto v = to_json(check_tame(harvey_lawson(3)));
  CHECK(v["lambda_minus"] == "2");
  CHECK(v["p3"] == "vacuous");
  CHECK(v["lambda_plus"].is_null());
}

TEST_CASE("sheets and chords") {
  auto s = sheets_from_json(parse_json(R"([{"weight":"1/2","id":"A"},{"weight":"1/2","id":"B"}])"));
  CHECK(total_weight(s) == Rational(1));
  CHECK(to_json(s)[1]["id"] == "B");
  auto c = to_json(enumerate_chords(2, Rational(1))[0]);
  CHECK(c["action"] == "1/2");
  CHECK(c["d"] == 1);
  auto comp = to_json(make_chord(3, 2, 1, 0));
  CHECK(comp["d"] == 2);
  CHECK(comp["action"] == "2/3");
}
