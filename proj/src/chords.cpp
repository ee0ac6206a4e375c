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

#include "lch/chords.hpp"

#include <algorithm>
#include <stdexcept>

namespace lch {

namespace {

long mod(long a, long k) { return ((a % k) + k) % k; }

void check_k(long k) {
  if (k < 1) throw std::invalid_argument("cover order must be at least 1");
}

}  // namespace

Rational chord_action(long k, long d, long m) {
  check_k(k);
  if (d < 0 || d >= k || m < 0) throw std::invalid_argument("chord class out of range");
  return Rational(Integer(d), Integer(k)) + Rational(m);
}

Rational action(const ChordComponent& c) { return c.action; }

ChordComponent make_chord(long k, long start_sheet, long end_sheet, long m) {
  check_k(k);
  if (start_sheet < 0 || start_sheet >= k || end_sheet < 0 || end_sheet >= k) {
    throw std::invalid_argument("sheet index out of range");
  }
  long d = mod(end_sheet - start_sheet, k);
  Rational a = chord_action(k, d, m);
  if (a.is_zero()) throw std::invalid_argument("zero-length chord");
  return ChordComponent{k, start_sheet, end_sheet, m, a};
}

std::vector<ChordComponent> ChordClass::expand() const {
  std::vector<ChordComponent> out;
  for (long s = 0; s < k; ++s) out.push_back(ChordComponent{k, s, mod(s + d, k), m, action});
  return out;
}

ChordComponent concatenate(const ChordComponent& a, const ChordComponent& b) {
  if (a.k != b.k) throw std::invalid_argument("chords of different covers");
  if (a.end_sheet != b.start_sheet) throw std::invalid_argument("chords do not compose");
  long d = mod(a.end_sheet - a.start_sheet, a.k) + mod(b.end_sheet - b.start_sheet, b.k);
  long m = a.m + b.m + d / a.k;
  return ChordComponent{a.k, a.start_sheet, b.end_sheet, m, a.action + b.action};
}

std::vector<ChordClass> enumerate_chords(long k, const Rational& max_action) {
  check_k(k);
  std::vector<ChordClass> out;
  if (max_action.sign() <= 0) return out;
  Integer top = max_action.floor();
  for (long m = 0; Integer(m) <= top; ++m) {
    for (long d = 0; d < k; ++d) {
      if (d == 0 && m == 0) continue;
      Rational a = chord_action(k, d, m);
      if (a > max_action) continue;
      out.push_back(ChordClass{k, d, m, a});
    }
  }
  std::sort(out.begin(), out.end(), [](const ChordClass& x, const ChordClass& y) {
    if (x.action != y.action) return x.action < y.action;
    return x.d < y.d;
  });
  return out;
}

std::vector<CriticalPoint> MorseModel::critical_points() const {
  if (rank < 0) throw std::invalid_argument("negative torus rank");
  if (rank > 20) throw std::invalid_argument("torus rank too large");
  if (positivity_witness.sign() <= 0) throw std::invalid_argument("positivity witness must be > 0");
  std::vector<CriticalPoint> out;
  const unsigned long count = 1UL << rank;
  for (unsigned long mask = 0; mask < count; ++mask) {
    CriticalPoint c;
    for (long i = 0; i < rank; ++i) {
      if (mask & (1UL << i)) c.subset.push_back(i + 1);
    }
    c.index = static_cast<long>(c.subset.size());
    c.label = "crit{";
    for (std::size_t i = 0; i < c.subset.size(); ++i) {
      if (i) c.label += ',';
      c.label += std::to_string(c.subset[i]);
    }
    c.label += '}';
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.subset < b.subset;
  });
  return out;
}

GeneratorSet generator_set(long k, const MorseModel& morse, const Rational& max_action) {
  GeneratorSet out;
  auto crit = morse.critical_points();
  for (const auto& c : enumerate_chords(k, max_action)) {
    for (const auto& p : crit) out.white.push_back(WhiteGenerator{c, p});
  }
  out.black = crit;
  return out;
}

}  // namespace lch
