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
#include <set>

#include "doctest.h"
#include "lch/toric.hpp"
#include "oracles.hpp"

using namespace lch;

namespace {

Polytope cube(std::size_t d) {
  std::vector<Facet> fs;
  for (std::size_t i = 0; i < d; ++i) {
    LatticeVector e(d), f(d);
    e[i] = 1;
    f[i] = -1;
    fs.push_back({e, Rational(1)});
    fs.push_back({f, Rational(1)});
  }
  return Polytope(d, fs);
}

Polytope projective_plane() {
  return anticanonical_polytope(2, {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{-1, -1}});
}

// Rank of a rational matrix by plain elimination.
std::size_t rank_of(std::vector<RationalVector> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

// Vertices by brute force over d-subsets of facets with Cramer-free elimination.
std::vector<RationalVector> brute_vertices(const Polytope& p) {
  const std::size_t d = p.dim(), m = p.facets().size();
  std::set<std::vector<std::string>> seen;
  std::vector<RationalVector> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == d) {
      std::vector<RationalVector> a;
      for (auto i : pick) {
        RationalVector row = to_rational(p.facets()[i].normal);
        row.push_back(-p.facets()[i].offset);
        a.push_back(row);
      }
      // Solve [N | b] by elimination.
      std::vector<RationalVector> aug = a;
      for (std::size_t c = 0; c < d; ++c) {
        std::size_t r = c;
        while (r < d && aug[r][c].is_zero()) ++r;
        if (r == d) return;
        std::swap(aug[r], aug[c]);
        for (std::size_t i = 0; i < d; ++i) {
          if (i == c || aug[i][c].is_zero()) continue;
          Rational f = aug[i][c] / aug[c][c];
          for (std::size_t k = 0; k <= d; ++k) aug[i][k] -= f * aug[c][k];
        }
      }
      RationalVector x(d);
      for (std::size_t i = 0; i < d; ++i) x[i] = aug[i][d] / aug[i][i];
      for (const auto& f : p.facets()) {
        if (dot(f.normal, x) < -f.offset) return;
      }
      std::vector<std::string> key;
      for (const auto& v : x) key.push_back(v.str());
      if (seen.insert(key).second) out.push_back(x);
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

// Codimension-two faces: vertex sets of facet pairs with affine dimension d - 2.
std::size_t brute_codim2_count(const Polytope& p) {
  auto verts = brute_vertices(p);
  const std::size_t d = p.dim();
  std::set<std::set<std::size_t>> faces;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    for (std::size_t j = i + 1; j < p.facets().size(); ++j) {
      std::set<std::size_t> on;
      std::vector<RationalVector> pts;
      for (std::size_t v = 0; v < verts.size(); ++v) {
        const auto& a = p.facets()[i];
        const auto& b = p.facets()[j];
        if (dot(a.normal, verts[v]) == -a.offset && dot(b.normal, verts[v]) == -b.offset) {
          on.insert(v);
          pts.push_back(verts[v]);
        }
      }
      if (pts.empty()) continue;
      std::vector<RationalVector> diffs;
      for (std::size_t k = 1; k < pts.size(); ++k) {
        RationalVector dlt(d);
        for (std::size_t c = 0; c < d; ++c) dlt[c] = pts[k][c] - pts[0][c];
        diffs.push_back(dlt);
      }
      if (rank_of(diffs) + 2 == d) faces.insert(on);
    }
  }
  return faces.size();
}

Polytope random_polytope(std::mt19937& rng, std::size_t d) {
  std::uniform_int_distribution<int> coord(-2, 2), off(1, 4);
  auto base = cube(d);
  std::vector<Facet> fs = base.facets();
  for (auto& f : fs) f.offset = Rational(off(rng));
  std::size_t extra = 8 - 2 * d;
  std::uniform_int_distribution<std::size_t> count(0, extra);
  for (std::size_t k = count(rng); k > 0; --k) {
    LatticeVector n(d);
    for (std::size_t i = 0; i < d; ++i) n[i] = coord(rng);
    if (n.is_zero()) continue;
    Integer g = n.content();
    LatticeVector prim(d);
    for (std::size_t i = 0; i < d; ++i) prim[i] = n[i] / g;
    fs.push_back({prim, Rational(off(rng))});
  }
  return Polytope(d, fs);
}

}  // namespace

TEST_CASE("standard simplex") {
  auto seg = standard_simplex(2);
  CHECK(seg.dim() == 1);
  auto sv = seg.vertices();
  REQUIRE(sv.size() == 2);
  CHECK(sv[0].point == RationalVector{Rational(0)});
  CHECK(sv[1].point == RationalVector{Rational(1)});

  auto tri = standard_simplex(3);
  std::set<RationalVector> pts;
  for (const auto& v : tri.vertices()) pts.insert(v.point);
  // Projections of e1, e2, e3 forgetting the last coordinate.
  CHECK(pts == std::set<RationalVector>{{Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                                        {Rational(0), Rational(1)}});
  CHECK(simplex_barycenter(4) == RationalVector(4, Rational(1, 4)));
  CHECK_THROWS_AS(standard_simplex(0), DimensionError);
}

TEST_CASE("polytope validation") {
  CHECK_THROWS_AS(Polytope(2, {{LatticeVector{2, 0}, Rational(1)}}), DimensionError);
  CHECK_THROWS_AS(Polytope(2, {{LatticeVector{1, 0, 0}, Rational(1)}}), DimensionError);
  Polytope half(1, {{LatticeVector{1}, Rational(0)}});
  CHECK_FALSE(half.is_bounded());
  CHECK(cube(3).is_bounded());
  CHECK(cube(3).contains({Rational(1), Rational(-1), Rational(0)}));
  CHECK_FALSE(cube(3).strictly_contains({Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("cone on a simplex is an orthant") {
  for (long n = 2; n <= 5; ++n) {
    auto c = cone_on(standard_simplex(n));
    CHECK(c.cone.dim() == static_cast<std::size_t>(n));
    CHECK(c.cone.facets().size() == static_cast<std::size_t>(n));
    // The facet normals form a unimodular matrix, so the cone is the orthant
    // in suitable lattice coordinates.
    std::vector<std::vector<long long>> m;
    for (const auto& f : c.cone.facets()) {
      CHECK(f.offset == Rational(0));
      std::vector<long long> row;
      for (const auto& x : f.normal.entries()) row.push_back(x.get_si());
      m.push_back(row);
    }
    CHECK(std::llabs(oracle::det(m)) == 1);
  }
}

TEST_CASE("cone on a point is a ray") {
  Polytope point(1, {{LatticeVector{1}, Rational(0)}, {LatticeVector{-1}, Rational(0)}});
  auto c = cone_on(point);
  CHECK(c.cone.contains({Rational(0), Rational(5)}));
  CHECK_FALSE(c.cone.contains({Rational(0), Rational(-1)}));
  CHECK_FALSE(c.cone.contains({Rational(1), Rational(1)}));
}

TEST_CASE("cone slices are dilates") {
  std::mt19937 rng(5);
  for (int c = 0; c < 40; ++c) {
    auto p = random_polytope(rng, 1 + c % 3);
    auto cone = cone_on(p);
    CHECK(cone.slice(Rational(1)).sorted_facets() == p.sorted_facets());
    Rational s(3, 2);
    auto sp = cone.slice(s);
    for (const auto& v : p.vertices()) {
      RationalVector scaled = v.point;
      for (auto& x : scaled) x *= s;
      CHECK(sp.contains(scaled));
      RationalVector lifted = scaled;
      lifted.push_back(s);
      CHECK(cone.cone.contains(lifted));
    }
  }
  CHECK_THROWS_AS(cone_on(Polytope(1, {{LatticeVector{1}, Rational(0)}})), DimensionError);
}

TEST_CASE("codimension-two faces of standard examples") {
  auto tri = codim2_faces(standard_simplex(3));
  CHECK(tri.size() == 3);
  for (const auto& f : tri) {
    CHECK(f.active.size() == 2);
    CHECK(f.vertices.size() == 1);
  }
  CHECK(codim2_faces(cube(3)).size() == 12);
  CHECK(codim2_faces(standard_simplex(4)).size() == 6);
  CHECK(codim2_faces(projective_plane()).size() == 3);
}

TEST_CASE("codimension-two faces match brute force") {
  std::mt19937 rng(9);
  for (int c = 0; c < 60; ++c) {
    std::size_t d = 1 + c % 3;
    auto p = random_polytope(rng, d);
    CHECK(p.facets().size() <= 8);
    CHECK(p.vertices().size() == brute_vertices(p).size());
    CHECK(codim2_faces(p).size() == brute_codim2_count(p));
  }
}

TEST_CASE("reduction smoothness") {
  // Divisors of the triple are 1, 1, 6.
  CHECK_FALSE(reduction_smoothness(LatticeVector{1, -2, 1}, LatticeVector{-2, 1, 1}));
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int c = 0; c < 200; ++c) {
    LatticeVector a{coord(rng), coord(rng), coord(rng)}, b{coord(rng), coord(rng), coord(rng)};
    CHECK(reduction_smoothness(a, b) == reduction_smoothness(b, a));
  }
}

TEST_CASE("reduction slice on the projective plane") {
  auto p = projective_plane();
  auto cone = cone_on(p);
  auto faces = codim2_faces(p);
  const Face* q = nullptr;
  for (const auto& f : faces) {
    if (f.active == std::vector<std::size_t>{0, 1}) q = &f;
  }
  REQUIRE(q != nullptr);
  CHECK(q->vertices == std::vector<RationalVector>{{Rational(-1), Rational(-1)}});

  RationalVector lambda{Rational(-1, 2), Rational(-1, 2)};
  auto r = reduction_slice(cone, *q, lambda);
  CHECK(r.s_min == Rational(1, 2));
  CHECK(r.s_max == Rational(1));
  CHECK(r.h1_normal == LatticeVector{1, -1});
  CHECK(r.u0 == Rational(0));
  // The vertical line u = u0 meets the reduced polytope exactly where lambda/s lies in P.
  for (long k = 1; k <= 24; ++k) {
    Rational s(k, 16);
    RationalVector x = lambda;
    for (auto& c : x) c /= s;
    CHECK(r.reduced.contains({r.u0, s}) == (p.contains(x) && s <= Rational(1)));
  }

  auto close = reduction_slice(cone, *q, {Rational(-1, 100), Rational(-1, 100)});
  CHECK(close.s_min == Rational(1, 100));

  CHECK_THROWS_AS(reduction_slice(cone, *q, {Rational(0), Rational(0)}), DimensionError);
  CHECK_THROWS_AS(reduction_slice(cone, *q, {Rational(-1), Rational(-1)}), DimensionError);
  CHECK_THROWS_AS(reduction_slice(cone, *q, {Rational(-1, 2), Rational(-1, 4)}), DimensionError);
}
