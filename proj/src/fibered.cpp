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

#include "lch/fibered.hpp"

#include <algorithm>

namespace lch {

bool BaseRecord::same_as(const BaseRecord& other) const {
  if (name != other.name || h2_rank != other.h2_rank) return false;
  if (polytope.has_value() != other.polytope.has_value()) return false;
  if (polytope && polytope->sorted_facets() != other.polytope->sorted_facets()) return false;
  return true;
}

FiberedContact make_fibered(BaseRecord base, Rational tau_z, std::optional<Rational> tau_y) {
  if (tau_z.sign() <= 0) throw std::invalid_argument("tau_Z must be positive");
  if (base.h2_rank < 0) throw std::invalid_argument("negative H2 rank");
  return FiberedContact{{FiberedComponent{std::move(base), std::move(tau_z), std::move(tau_y)}}};
}

FiberedContact construct_union(const std::vector<FiberedContact>& inputs) {
  FiberedContact out;
  for (const auto& z : inputs) {
    out.components.insert(out.components.end(), z.components.begin(), z.components.end());
  }
  return out;
}

FiberedContact construct_finite_cover(const FiberedContact& z, long m) {
  if (m <= 0) throw std::invalid_argument("cover degree must be positive");
  FiberedContact out = z;
  for (auto& c : out.components) c.tau_z *= Rational(m);
  return out;
}

FiberedContact construct_tensor(const FiberedContact& a, const FiberedContact& b) {
  if (a.components.size() != b.components.size()) {
    throw std::invalid_argument("tensor product needs matching components");
  }
  FiberedContact out = a;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    if (!a.components[i].base.same_as(b.components[i].base)) {
      throw std::invalid_argument("tensor product needs identical bases");
    }
    out.components[i].tau_z += b.components[i].tau_z;
  }
  return out;
}

FiberedContact construct_exterior_tensor(const FiberedContact& a, const FiberedContact& b) {
  FiberedContact out;
  for (const auto& x : a.components) {
    for (const auto& y : b.components) {
      FiberedComponent c;
      c.base.name = x.base.name + "x" + y.base.name;
      c.base.h2_rank = x.base.h2_rank + y.base.h2_rank;
      // tau_1 omega_1 + tau_2 omega_2 is g times a primitive class; the
      // product is monotone only when the ratios tau_Y / tau_Z agree.
      Rational g = gcd(x.tau_z, y.tau_z);
      c.tau_z = g;
      if (x.tau_y && y.tau_y && *x.tau_y / x.tau_z == *y.tau_y / y.tau_z) {
        c.tau_y = *x.tau_y * g / x.tau_z;
      }
      out.components.push_back(std::move(c));
    }
  }
  return out;
}

FiberedContact construct_quotient(const FiberedContact& z, const GroupAction& action) {
  if (action.rank_reduction < 0) throw std::invalid_argument("negative rank reduction");
  FiberedContact out = z;
  for (auto& c : out.components) {
    if (action.rank_reduction > c.base.h2_rank) {
      throw std::invalid_argument("group action reduces more rank than the base has");
    }
    c.base.name = c.base.name + "//" + action.name;
    c.base.h2_rank -= action.rank_reduction;
    c.base.polytope.reset();
    c.tau_y = action.reduced_tau_y;
  }
  return out;
}

bool tame_pair_check(const FiberedContact& z) {
  bool tame = true;
  for (const auto& c : z.components) {
    if (!c.tau_y) throw std::invalid_argument("tau_Y unknown for base " + c.base.name);
    if (c.tau_z < Rational(1) || *c.tau_y < Rational(3)) tame = false;
  }
  return tame;
}

Rational holonomy_of_disk(const Rational& area) { return area.frac(); }

LiftResult lift_exists(const std::vector<Rational>& area_generators) {
  LiftResult out;
  RationalSubgroup g = subgroup_of_rationals(area_generators);
  out.exists = g.kind == RationalSubgroup::Kind::Discrete;
  out.generator = g.generator;
  out.fiber_order_divisor = g.generator ? g.generator->den() : Integer(1);
  return out;
}

LegendrianLift legendrian_lift(std::string label, long h1_rank, const std::vector<Rational>& areas) {
  if (h1_rank < 0) throw std::invalid_argument("negative first homology rank");
  LiftResult r = lift_exists(areas);
  if (!r.exists) throw std::invalid_argument("area subgroup is not discrete");
  return LegendrianLift{std::move(label), h1_rank, r.fiber_order_divisor, r.generator};
}

}  // namespace lch
