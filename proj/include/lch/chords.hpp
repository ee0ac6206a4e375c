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

#pragma once

#include <string>
#include <vector>

#include "lch/rational.hpp"

namespace lch {

/// Chord from sheet start to sheet end of a k-fold Legendrian cover,
/// winding m extra full fibers.
struct ChordComponent {
  long k = 1;
  long start_sheet = 0;
  long end_sheet = 0;
  long m = 0;
  Rational action;
};

/// All k chord components sharing a sheet shift d and winding m.
struct ChordClass {
  long k = 1;
  long d = 0;
  long m = 0;
  Rational action;

  std::vector<ChordComponent> expand() const;
};

Rational chord_action(long k, long d, long m);
Rational action(const ChordComponent& c);
ChordComponent make_chord(long k, long start_sheet, long end_sheet, long m);

/// Chord followed by another starting where the first ends.
ChordComponent concatenate(const ChordComponent& a, const ChordComponent& b);

/// Classes with 0 < d/k + m <= max_action sorted by action, then d.
std::vector<ChordClass> enumerate_chords(long k, const Rational& max_action);

struct CriticalPoint {
  std::vector<long> subset;
  long index = 0;
  std::string label;
};

/// Product Morse function on T^r; positivity witness for the black vector field.
struct MorseModel {
  long rank = 0;
  Rational positivity_witness = Rational(1);

  std::vector<CriticalPoint> critical_points() const;
};

struct WhiteGenerator {
  ChordClass chord;
  CriticalPoint critical;
};

struct GeneratorSet {
  std::vector<WhiteGenerator> white;
  std::vector<CriticalPoint> black;
  std::size_t size() const { return white.size() + black.size(); }
};

GeneratorSet generator_set(long k, const MorseModel& morse, const Rational& max_action);

}  // namespace lch
