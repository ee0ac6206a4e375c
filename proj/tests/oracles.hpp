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

// Independent reference computations used by the tests. Nothing here calls
// into the algorithms it is meant to check.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "lch/building.hpp"

namespace oracle {

/// Denominator of the gcd of p_i/d_i, via a common denominator.
inline long long lift_divisor(const std::vector<std::pair<long long, long long>>& gens) {
  long long common = 1;
  for (const auto& [p, d] : gens) common = std::lcm(common, d);
  long long g = 0;
  for (const auto& [p, d] : gens) g = std::gcd(g, std::llabs(p) * (common / d));
  if (g == 0) return 1;
  return common / std::gcd(g, common);
}

/// Event simulation of unit-speed rotation starting at lift point 0 of k
/// equally spaced points on a fiber of length 1. Time is measured in ticks
/// of 1/(k * den); returns (ticks, end sheet) for each chord with time at most
/// num/den.
inline std::vector<std::pair<long, long>> rotation_chords(long k, long num, long den) {
  const long ticks_per_turn = k * den;
  const long horizon = num * k;
  std::vector<long> points;
  for (long j = 0; j < k; ++j) points.push_back(j * den);
  std::vector<std::pair<long, long>> out;
  long position = 0, elapsed = 0;
  for (;;) {
    long best = ticks_per_turn + 1, sheet = -1;
    for (long j = 0; j < k; ++j) {
      long ahead = ((points[j] - position) % ticks_per_turn + ticks_per_turn) % ticks_per_turn;
      if (ahead == 0) ahead = ticks_per_turn;
      if (ahead < best) {
        best = ahead;
        sheet = j;
      }
    }
    elapsed += best;
    position = (position + best) % ticks_per_turn;
    if (elapsed > horizon) break;
    out.emplace_back(elapsed, sheet);
  }
  return out;
}

inline long long det(std::vector<std::vector<long long>> a) {
  // Fraction-free Bareiss elimination.
  const std::size_t n = a.size();
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(a[i][j]) * a[k][k] - static_cast<__int128>(a[i][k]) * a[k][j];
        a[i][j] = static_cast<long long>(v / prev);
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void choose(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Elementary divisors from determinantal divisors: D_k = gcd of all k x k
/// minors and d_k = D_k / D_{k-1}. min(rows, cols) entries, zeros last.
inline std::vector<long long> elementary_divisors(const std::vector<std::vector<long long>>& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  const std::size_t n = std::min(rows, cols);
  std::vector<long long> out;
  long long prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    choose(rows, k, 0, cur, rs);
    choose(cols, k, 0, cur, cs);
    long long g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<long long>> sub(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        }
        g = std::gcd(g, std::llabs(det(sub)));
      }
    }
    if (g == 0) {
      out.resize(n, 0);
      return out;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// (incoming, outgoing) action totals of a whole building: chord leaves only,
/// since chords joining two of its vertices cancel.
inline std::pair<lch::Rational, lch::Rational> puncture_totals(const lch::BuildingType& t) {
  lch::Rational in, out;
  for (const auto& e : t.edges) {
    if (e.ends.size() != 1 || !e.action) continue;
    if (e.cls == lch::EdgeClass::WhiteMinus) in += *e.action;
    if (e.cls == lch::EdgeClass::WhitePlus) out += *e.action;
  }
  return {in, out};
}

}  // namespace oracle
