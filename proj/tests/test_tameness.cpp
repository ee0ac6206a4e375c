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

#include <random>

#include "doctest.h"
#include "lch/json_io.hpp"
#include "lch/tameness.hpp"

using namespace lch;

namespace {

bool same_verdict(const TamenessVerdict& a, const TamenessVerdict& b) {
  return a.p1 == b.p1 && a.p2 == b.p2 && a.lambda_minus == b.lambda_minus && a.p3 == b.p3 &&
         a.lambda_plus == b.lambda_plus && a.overall == b.overall;
}

// Random integer matrix of determinant +-1 built from elementary row operations.
std::vector<std::vector<long>> unimodular(std::mt19937& rng, std::size_t n) {
  std::vector<std::vector<long>> u(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int step = 0; step < 8 && n > 1; ++step) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    long f = coeff(rng);
    for (std::size_t k = 0; k < n; ++k) u[i][k] += f * u[j][k];
  }
  if (coeff(rng) > 0) std::swap(u[0], u[n - 1]);
  return u;
}

CobordismClassData change_basis(const CobordismClassData& d, std::mt19937& rng) {
  CobordismClassData out = d;
  auto u = unimodular(rng, d.classes.size());
  for (std::size_t i = 0; i < d.classes.size(); ++i) {
    AbsoluteClass c{"b" + std::to_string(i), 0, 0, 0, 0, true};
    for (std::size_t j = 0; j < d.classes.size(); ++j) {
      Rational f(u[i][j]);
      c.omega += f * d.classes[j].omega;
      c.c1 += f * d.classes[j].c1;
      c.y_minus += f * d.classes[j].y_minus;
      c.y_plus += f * d.classes[j].y_plus;
    }
    out.classes[i] = c;
  }
  if (!d.relative.empty()) {
    auto v = unimodular(rng, d.relative.size());
    for (std::size_t i = 0; i < d.relative.size(); ++i) {
      RelativeClass r{"r" + std::to_string(i), 0, 0};
      for (std::size_t j = 0; j < d.relative.size(); ++j) {
        r.omega += Rational(v[i][j]) * d.relative[j].omega;
        r.y_plus += Rational(v[i][j]) * d.relative[j].y_plus;
      }
      out.relative[i] = r;
    }
  }
  return out;
}

BuildingType decorated(const std::string& text) { return building_from_json(parse_json(text)); }

}  // namespace

TEST_CASE("trivial cobordism") {
  for (long n = 2; n <= 6; ++n) {
    auto v = check_tame(trivial_cobordism(n));
    CHECK(v.p1);
    CHECK(v.p2);
    CHECK(v.lambda_minus == Rational(n - 1));
    CHECK(v.p3 == P3State::Holds);
    CHECK(v.lambda_plus == Rational(1));
    CHECK(v.overall == (n > 2));
  }
}

TEST_CASE("Harvey-Lawson filling") {
  for (long n = 2; n <= 6; ++n) {
    auto v = check_tame(harvey_lawson(n));
    CHECK(v.lambda_minus == Rational(n - 1));
    CHECK(v.p3 == P3State::Vacuous);
    CHECK_FALSE(v.lambda_plus.has_value());
    CHECK((v.p1 && v.p2));
    // The end over CP1 has tau_Y = 2, below the threshold for tame pairs.
    CHECK(v.ends_tame == (n >= 3));
    CHECK(v.overall == (n >= 3));
  }
}

TEST_CASE("ball blow-up fails the no-cap condition") {
  for (long n = 2; n <= 5; ++n) {
    auto v = check_tame(ball_blowup(n));
    CHECK_FALSE(v.p2);
    CHECK_FALSE(v.overall);
    bool seen = false;
    for (const auto& c : v.certificate) {
      if (c.name == "fiber") {
        seen = true;
        CHECK(c.value == Rational(1));
      }
    }
    CHECK(seen);
  }
}

TEST_CASE("built-in names") {
  CHECK(builtin_cobordism("harvey-lawson@1", 3).name == builtin_cobordism("harvey-lawson", 3).name);
  CHECK_THROWS(builtin_cobordism("harvey-lawson@2", 3));
  CHECK_THROWS(builtin_cobordism("nothing", 3));
  for (const auto& name : builtin_cobordism_names()) CHECK_NOTHROW(builtin_cobordism(name, 3));
}

TEST_CASE("truncated symplectization") {
  for (long n = 2; n <= 6; ++n) {
    auto v = check_tame(symplectization_truncation(Rational(n), Rational(1), Rational(1), Rational(2)));
    CHECK(v.lambda_minus == Rational(n));
    CHECK(v.lambda_plus == Rational(1));
    CHECK(v.overall == (n >= 3));
  }
  auto half = check_tame(symplectization_truncation(Rational(3), Rational(1), Rational(1), Rational(3, 2)));
  CHECK_FALSE(half.p1);
  CHECK_FALSE(half.overall);
  auto two = check_tame(symplectization_truncation(Rational(4), Rational(2), Rational(1), Rational(3)));
  CHECK(two.lambda_plus == Rational(2));
  CHECK_THROWS(symplectization_truncation(Rational(3), Rational(1), Rational(2), Rational(2)));
  CHECK_THROWS(symplectization_truncation(Rational(3), Rational(1), Rational(0), Rational(2)));

  std::mt19937 rng(4);
  std::uniform_int_distribution<int> ty(9, 30), tz(3, 15), w(1, 5);
  for (int c = 0; c < 300; ++c) {
    Rational tau_y(Integer(ty(rng)), Integer(3)), tau_z(Integer(tz(rng)), Integer(3));
    Rational w1(w(rng)), w2 = w1 + Rational(w(rng));
    auto v = check_tame(symplectization_truncation(tau_y, tau_z, w1, w2));
    CHECK(v.lambda_minus == tau_y + tau_z - Rational(1));
    CHECK(v.lambda_plus == tau_z);
  }
}

TEST_CASE("verdict is basis independent") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> rank(1, 4), small(-3, 3), lam(0, 3);
  for (int c = 0; c < 400; ++c) {
    CobordismClassData d;
    d.name = "random";
    int r = rank(rng);
    Rational lambda_minus(lam(rng)), lambda_plus(lam(rng));
    bool proportional = c % 3 != 0;
    for (int i = 0; i < r; ++i) {
      Rational omega(small(rng));
      AbsoluteClass a{"a" + std::to_string(i), omega, 0, Rational(small(rng)), 0, true};
      a.c1 = (Rational(1) + lambda_minus) * omega + a.y_minus + (proportional ? Rational(0) : Rational(small(rng)));
      d.classes.push_back(a);
      Rational rel_omega(small(rng));
      d.relative.push_back({"r" + std::to_string(i), rel_omega, -lambda_plus * rel_omega});
    }
    d.outgoing_end_nonempty = c % 5 != 0;
    auto base = check_tame(d);
    for (int k = 0; k < 3; ++k) CHECK(same_verdict(base, check_tame(change_basis(d, rng))));
  }
}

TEST_CASE("no-cap filter") {
  auto verdict = check_tame(trivial_cobordism(3));
  REQUIRE(verdict.lambda_plus == Rational(1));

  auto cap = decorated(R"({"target":"cobordism","vertices":[{"id":"u","kind":"disk","level":0}],
    "edges":[{"id":"o","ends":["u"],"class":"white+","action":"1"},{"id":"l","ends":["u"],"class":"L"},
      {"id":"k","ends":["u"],"class":"L"}],
    "decorations":{"u":{"area":"1","chern":"0","y-":"0","y+":"1"}}})");
  auto r = no_cap_filter(cap, verdict);
  CHECK_FALSE(r.admitted);
  CHECK(r.vertex == "u");

  auto filling = decorated(R"({"target":"cobordism","vertices":[{"id":"u","kind":"disk","level":0}],
    "edges":[{"id":"i","ends":["u"],"class":"white-","action":"1"},{"id":"l","ends":["u"],"class":"L"},
      {"id":"k","ends":["u"],"class":"L"}],
    "decorations":{"u":{"area":"0","chern":"0","y-":"1","y+":"0"}}})");
  CHECK(no_cap_filter(filling, verdict).admitted);
  CHECK(no_cap_filter(filling, trivial_cobordism(3)).admitted);

  auto sphere = decorated(R"({"target":"cobordism","vertices":[{"id":"s","kind":"sphere","level":0}],
    "edges":[{"id":"i","ends":["s"],"class":"white-","action":"1"},{"id":"x","ends":["s"],"class":"D"},
      {"id":"y","ends":["s"],"class":"D"}],
    "decorations":{"s":{"area":"1","chern":"3","y-":"1","y+":"0"}}})");
  REQUIRE(total_dim(sphere) == 0);
  CHECK(sphere_stratum_dim(Rational(3), Rational(1), 0, 0).single_puncture.sign() > 0);
  CHECK_FALSE(no_cap_filter(sphere, verdict).admitted);

  auto bare = cap;
  bare.decorations.reset();
  CHECK_THROWS_AS(no_cap_filter(bare, verdict), TypeError);
}

TEST_CASE("no-cap filter over the type library") {
  auto verdict = check_tame(trivial_cobordism(4));
  REQUIRE(verdict.p2);
  REQUIRE(verdict.p3 == P3State::Holds);
  std::size_t checked = 0;
  for (auto t : enumerate_types({})) {
    std::map<std::string, Decoration> decs;
    for (const auto& v : t.vertices) decs[v.id] = Decoration{1, 0, 0, 0, {}, 0};
    t.decorations = decs;
    bool expect_excluded = false;
    for (const auto& v : t.vertices) {
      if (v.kind != VertexKind::Disk || v.level != 0) continue;
      long incoming = 0;
      for (const auto& e : t.edges) {
        if (e.cls == EdgeClass::WhiteMinus && e.ends.size() == 1 && e.ends[0] == v.id) ++incoming;
        if (e.is_chord() && e.ends.size() == 2 && e.ends[1] == v.id) ++incoming;
      }
      if (incoming == 0) expect_excluded = true;
    }
    if (expect_excluded) {
      ++checked;
      CHECK_FALSE(no_cap_filter(t, verdict).admitted);
    }
  }
  CHECK(checked > 0);
}
