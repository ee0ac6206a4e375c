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

#include <optional>
#include <string>
#include <vector>

#include "lch/building.hpp"

namespace lch {

/// Curve class pairings in H2 of the compactified cobordism.
struct AbsoluteClass {
  std::string name;
  Rational omega;
  Rational c1;
  Rational y_minus;
  Rational y_plus;
  /// Class lies in the complement of Y+, so it is tested by the no-cap condition.
  bool avoids_y_plus = true;
};

/// Class in the relative table for (X - Y-, L - Y-).
struct RelativeClass {
  std::string name;
  Rational omega;
  Rational y_plus;
};

struct EndData {
  Rational tau_y;
  Rational tau_z;
};

struct CobordismClassData {
  std::string name;
  std::vector<AbsoluteClass> classes;
  std::vector<RelativeClass> relative;
  bool outgoing_end_nonempty = true;
  bool integral_symplectic_class = true;
  bool simply_connected = true;
  std::optional<EndData> negative_end;
  std::optional<EndData> positive_end;
};

enum class P3State { Holds, Fails, Vacuous };
const char* to_string(P3State s);

struct ClassCertificate {
  std::string name;
  /// "absolute" or "relative".
  std::string table;
  Rational omega;
  /// Logarithmic Chern pairing (absolute) or Thom pairing (relative).
  Rational value;
  /// value minus the fitted multiple of omega.
  Rational residual;
};

struct TamenessVerdict {
  bool p1 = false;
  bool p2 = false;
  std::optional<Rational> lambda_minus;
  P3State p3 = P3State::Fails;
  std::optional<Rational> lambda_plus;
  /// Every end base has tau_Y >= 3 and tau_Z >= 1.
  bool ends_tame = true;
  bool overall = false;
  std::vector<ClassCertificate> certificate;
};

TamenessVerdict check_tame(const CobordismClassData& d);

CobordismClassData trivial_cobordism(long n);
CobordismClassData harvey_lawson(long n);
CobordismClassData ball_blowup(long n);
/// Built-in by versioned name, e.g. "harvey-lawson@1"; the bare name means @1.
CobordismClassData builtin_cobordism(const std::string& name, long n);
std::vector<std::string> builtin_cobordism_names();

/// Slice weights w = e^{-sigma} are given directly, w2 > w1 > 0.
CobordismClassData symplectization_truncation(const Rational& tau_y, const Rational& tau_z,
                                              const Rational& w1, const Rational& w2);

struct FilterResult {
  bool admitted = true;
  std::string vertex;
  std::string reason;
};

FilterResult no_cap_filter(const BuildingType& m, const CobordismClassData& d);
FilterResult no_cap_filter(const BuildingType& m, const TamenessVerdict& v);

}  // namespace lch
