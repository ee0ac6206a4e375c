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

#include "lch/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace lch {

LatticeVector::LatticeVector(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long e : entries) entries_.emplace_back(e);
}

Integer LatticeVector::content() const {
  Integer g = 0;
  for (const auto& e : entries_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  return g;
}

bool LatticeVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& e) { return e == 0; });
}

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i].get_str();
  }
  os << ')';
  return os.str();
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector out;
  out.reserve(v.dim());
  for (const auto& e : v.entries()) out.emplace_back(e);
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot product of vectors of different length");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const LatticeVector& a, const RationalVector& b) { return dot(to_rational(a), b); }

LatticeVector primitive_direction(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm_of(l, x.den());
  std::vector<Integer> ints;
  ints.reserve(v.size());
  for (const auto& x : v) ints.push_back(x.num() * (l / x.den()));
  LatticeVector out(std::move(ints));
  Integer g = out.content();
  if (g == 0) throw DimensionError("zero vector has no primitive direction");
  std::vector<Integer> e = out.entries();
  for (auto& x : e) x /= g;
  return LatticeVector(std::move(e));
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_lattice_rows(const std::vector<LatticeVector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().dim();
  std::vector<RationalVector> rr;
  rr.reserve(rows.size());
  for (const auto& r : rows) rr.push_back(to_rational(r));
  return from_rows(rr, cols);
}

RationalVector RationalMatrix::row(std::size_t r) const {
  RationalVector out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

std::vector<std::size_t> RationalMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t p = lead;
    while (p < rows_ && at(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != lead) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(at(p, k), at(lead, k));
    }
    Rational inv = Rational(1) / at(lead, c);
    for (std::size_t k = 0; k < cols_; ++k) at(lead, k) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead || at(r, c).is_zero()) continue;
      Rational f = at(r, c);
      for (std::size_t k = 0; k < cols_; ++k) at(r, k) -= f * at(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return copy.rref().size();
}

std::vector<RationalVector> RationalMatrix::nullspace() const {
  RationalMatrix r = *this;
  auto pivots = r.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> RationalMatrix::solve(const RationalVector& b) const {
  if (b.size() != rows_) throw DimensionError("right-hand side has wrong length");
  RationalMatrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  RationalVector x(cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
  return x;
}

SmithResult smith_normal_form(const IntegerMatrix& input) {
  IntegerMatrix a = input;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& r : a) {
    if (r.size() != cols) throw DimensionError("ragged integer matrix");
  }
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    // Move the smallest nonzero entry of the remaining block to (t, t), then
    // clear its row and column; repeat until the pivot divides everything.
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          if (pr == rows || abs(a[i][j]) < abs(a[pr][pc])) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) break;
      std::swap(a[t], a[pr]);
      for (auto& r : a) std::swap(r[t], r[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
  }
  SmithResult res;
  res.divisors.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    Integer d = abs(a[t][t]);
    res.divisors.push_back(d);
    if (d != 0) ++res.rank;
  }
  return res;
}

bool is_lattice_basis_of_span(const std::vector<LatticeVector>& vectors) {
  if (vectors.empty()) return true;
  const std::size_t d = vectors.front().dim();
  IntegerMatrix m;
  m.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.dim() != d) throw DimensionError("vectors have different ambient dimensions");
    m.push_back(v.entries());
  }
  if (vectors.size() > d) return false;
  SmithResult s = smith_normal_form(m);
  if (s.rank != vectors.size()) return false;
  return std::all_of(s.divisors.begin(), s.divisors.end(), [](const Integer& x) { return x == 1; });
}

RationalSubgroup subgroup_of_rationals(const std::vector<Rational>& generators) {
  RationalSubgroup out;
  Rational g;
  for (const auto& x : generators) g = gcd(g, x);
  if (!g.is_zero()) out.generator = g;
  return out;
}

}  // namespace lch
