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
#include "lch/lattice.hpp"
#include "oracles.hpp"

using namespace lch;

namespace {

IntegerMatrix rows(std::initializer_list<LatticeVector> vs) {
  IntegerMatrix m;
  for (const auto& v : vs) m.push_back(v.entries());
  return m;
}

std::vector<long> divisors(const SmithResult& s) {
  std::vector<long> out;
  for (const auto& d : s.divisors) out.push_back(d.get_si());
  return out;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto id = smith_normal_form(rows({{1, 0}, {0, 1}}));
  CHECK(divisors(id) == std::vector<long>{1, 1});
  CHECK(id.rank == 2);

  auto twos = smith_normal_form(rows({{2, 0}, {0, 2}}));
  CHECK(divisors(twos) == std::vector<long>{2, 2});
  CHECK(twos.rank == 2);

  // Maximal minors of this triple are 0, 6, -6, 6, so the last divisor is 6.
  auto hl = smith_normal_form(rows({{-1, -1, 2, 0}, {1, -2, 1, 1}, {-2, 1, 1, 1}}));
  CHECK(divisors(hl) == std::vector<long>{1, 1, 6});
  CHECK(hl.rank == 3);

  auto zero = smith_normal_form(rows({{0, 0, 0}}));
  CHECK(divisors(zero) == std::vector<long>{0});
  CHECK(zero.rank == 0);
}

TEST_CASE("smith normal form matches determinantal divisors") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
  for (int c = 0; c < 300; ++c) {
    int r = dim(rng), k = dim(rng);
    std::vector<std::vector<long long>> m(r, std::vector<long long>(k));
    IntegerMatrix im(r, std::vector<Integer>(k));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < k; ++j) im[i][j] = static_cast<long>(m[i][j] = entry(rng));
    }
    auto want = oracle::elementary_divisors(m);
    auto got = smith_normal_form(im);
    REQUIRE(got.divisors.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(got.divisors[i] == static_cast<long>(want[i]));
    for (std::size_t i = 1; i < got.divisors.size(); ++i) {
      if (got.divisors[i] != 0) CHECK(got.divisors[i] % got.divisors[i - 1] == 0);
    }
  }
}

TEST_CASE("lattice basis of span") {
  CHECK(is_lattice_basis_of_span({LatticeVector{1, 0}, LatticeVector{0, 1}}));
  CHECK_FALSE(is_lattice_basis_of_span({LatticeVector{2, 0}, LatticeVector{0, 1}}));
  CHECK_FALSE(is_lattice_basis_of_span({LatticeVector{1, 2}, LatticeVector{2, 4}}));
  CHECK(is_lattice_basis_of_span({LatticeVector{1, 1, 0}}));
  CHECK_FALSE(is_lattice_basis_of_span({LatticeVector{2, 2, 0}}));
  // (nu1 + nu2, 0), (nu1, 1), (nu2, 1) has index 6 in its saturation.
  CHECK_FALSE(is_lattice_basis_of_span(
      {LatticeVector{-1, -1, 2, 0}, LatticeVector{1, -2, 1, 1}, LatticeVector{-2, 1, 1, 1}}));
  CHECK_THROWS_AS(is_lattice_basis_of_span({LatticeVector{1, 0}, LatticeVector{1, 0, 0}}), DimensionError);
}

TEST_CASE("lattice basis agrees with a unimodular change of basis") {
  // Images of the standard basis under random unimodular matrices stay bases;
  // scaling one vector by 2 never is.
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3), pick(0, 2);
  for (int c = 0; c < 200; ++c) {
    std::vector<std::vector<long>> u = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int step = 0; step < 6; ++step) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      long f = coeff(rng);
      for (int k = 0; k < 3; ++k) u[i][k] += f * u[j][k];
    }
    std::vector<LatticeVector> vs;
    for (const auto& row : u) vs.push_back(LatticeVector{row[0], row[1], row[2]});
    CHECK(is_lattice_basis_of_span(vs));
    LatticeVector doubled(std::vector<Integer>{2 * vs[0][0], 2 * vs[0][1], 2 * vs[0][2]});
    CHECK_FALSE(is_lattice_basis_of_span({doubled, vs[1], vs[2]}));
  }
}

TEST_CASE("rational subgroups") {
  auto g = subgroup_of_rationals({Rational(1, 3), Rational(1, 6)});
  CHECK(g.kind == RationalSubgroup::Kind::Discrete);
  CHECK(g.generator == Rational(1, 6));
  auto trivial = subgroup_of_rationals({});
  CHECK(trivial.kind == RationalSubgroup::Kind::Discrete);
  CHECK_FALSE(trivial.generator.has_value());
  for (long n = 1; n <= 12; ++n) CHECK(subgroup_of_rationals({Rational(1, n)}).generator == Rational(1, n));
}

TEST_CASE("rational matrices") {
  auto m = RationalMatrix::from_lattice_rows({LatticeVector{1, 2, 3}, LatticeVector{2, 4, 6}});
  CHECK(m.rank() == 1);
  auto ns = m.nullspace();
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(dot(LatticeVector{1, 2, 3}, v) == Rational(0));
  auto x = m.solve({Rational(1), Rational(2)});
  REQUIRE(x.has_value());
  CHECK(dot(LatticeVector{1, 2, 3}, *x) == Rational(1));
  CHECK_FALSE(m.solve({Rational(1), Rational(1)}).has_value());
  CHECK(primitive_direction({Rational(2, 3), Rational(-4, 9)}) == LatticeVector{3, -2});
  CHECK(LatticeVector{4, -6}.content() == 2);
}
