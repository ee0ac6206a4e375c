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

#include "lch/toric.hpp"

namespace lch {

/// Base of a circle fibration: a name, the rank of its second cohomology,
/// and optionally a toric moment polytope.
struct BaseRecord {
  std::string name;
  long h2_rank = 1;
  std::optional<Polytope> polytope;

  bool same_as(const BaseRecord& other) const;
};

/// One connected circle bundle Z -> Y with curv = -tau_Z omega_Y and,
/// when Y is monotone, c1(Y) = tau_Y [omega_Y].
struct FiberedComponent {
  BaseRecord base;
  Rational tau_z;
  std::optional<Rational> tau_y;
};

struct FiberedContact {
  std::vector<FiberedComponent> components;
};

/// Effect of a Hamiltonian group action on the pairing table.
struct GroupAction {
  std::string name;
  long rank_reduction = 1;
  std::optional<Rational> reduced_tau_y;
};

FiberedContact make_fibered(BaseRecord base, Rational tau_z, std::optional<Rational> tau_y);

FiberedContact construct_union(const std::vector<FiberedContact>& inputs);
FiberedContact construct_finite_cover(const FiberedContact& z, long m);
FiberedContact construct_tensor(const FiberedContact& a, const FiberedContact& b);
FiberedContact construct_exterior_tensor(const FiberedContact& a, const FiberedContact& b);
FiberedContact construct_quotient(const FiberedContact& z, const GroupAction& action);

bool tame_pair_check(const FiberedContact& z);

/// Holonomy angle in [0, 1) of the boundary of a disk of the given area.
Rational holonomy_of_disk(const Rational& area);

struct LiftResult {
  bool exists = true;
  /// Every fiber of the lift has order dividing this.
  Integer fiber_order_divisor = 1;
  std::optional<Rational> generator;
};

LiftResult lift_exists(const std::vector<Rational>& area_generators);

struct LegendrianLift {
  std::string label;
  long h1_rank = 0;
  Integer cover_order = 1;
  std::optional<Rational> area_generator;
};

LegendrianLift legendrian_lift(std::string label, long h1_rank, const std::vector<Rational>& areas);

}  // namespace lch
