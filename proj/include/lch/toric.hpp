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

#include <cstddef>
#include <optional>
#include <vector>

#include "lch/lattice.hpp"

namespace lch {

/// Half-space {x : <x, normal> >= -offset}.
struct Facet {
  LatticeVector normal;
  Rational offset;

  friend bool operator==(const Facet& a, const Facet& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.normal == b.normal) return a.offset < b.offset;
    return a.normal < b.normal;
  }
};

struct Vertex {
  RationalVector point;
  /// Indices of facets tight at this vertex, ascending.
  std::vector<std::size_t> tight;
};

/// Polyhedron in H-representation with primitive integer facet normals.
class Polytope {
 public:
  Polytope() = default;
  Polytope(std::size_t dim, std::vector<Facet> facets);

  std::size_t dim() const { return dim_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const RationalVector& x) const;
  /// Facet indices with <x, normal> = -offset.
  std::vector<std::size_t> tight_at(const RationalVector& x) const;
  /// True when every facet inequality holds strictly at x.
  bool strictly_contains(const RationalVector& x) const;

  bool is_bounded() const;
  /// Exact vertex enumeration; deterministic order.
  std::vector<Vertex> vertices() const;
  bool is_empty() const;
  /// Bounded with nonempty interior.
  bool is_full_dimensional() const;

  /// Facets sorted, for set comparisons.
  std::vector<Facet> sorted_facets() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Facet> facets_;
};

/// Affine dimension of a finite point set (-1 when empty).
long affine_dimension(const std::vector<RationalVector>& points);

struct Face {
  std::vector<std::size_t> active;
  std::size_t dim = 0;
  std::vector<RationalVector> vertices;
};

struct ConePolytope {
  /// Cone in dimension base.dim() + 1, last coordinate is the height.
  Polytope cone;
  Polytope base;
  /// Facet index in the cone for each base facet.
  std::vector<std::size_t> base_facet_index;

  /// Cross-section at height s > 0, facets primitivized.
  Polytope slice(const Rational& s) const;
};

/// Simplex {x_i >= 0, sum x_i <= 1} in dimension n - 1.
Polytope standard_simplex(long n);
RationalVector simplex_barycenter(long n);

/// Anticanonical polytope of a Fano toric variety: all offsets equal to one.
Polytope anticanonical_polytope(std::size_t dim, const std::vector<LatticeVector>& normals);

ConePolytope cone_on(const Polytope& p);

std::vector<Face> codim2_faces(const Polytope& p);

struct ReductionSlice {
  /// Residual polytope in coordinates (u, s): x = lambda1 + u * h1_normal.
  Polytope reduced;
  bool smooth = false;
  LatticeVector nu1;
  LatticeVector nu2;
  /// Primitive normal of the hyperplane h1 inside h.
  LatticeVector h1_normal;
  RationalVector lambda1;
  /// Coordinate of lambda along h1_normal.
  Rational u0;
  /// Filling line {lambda} x [s_min, s_max] inside the truncated cone.
  RationalVector lambda;
  Rational s_min;
  Rational s_max;
};

/// Delzant-type check on {(nu1 + nu2, 0), (nu1, 1), (nu2, 1)}.
bool reduction_smoothness(const LatticeVector& nu1, const LatticeVector& nu2);

ReductionSlice reduction_slice(const ConePolytope& c, const Face& q, const RationalVector& lambda);

}  // namespace lch
