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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lch/rational.hpp"

namespace lch {

enum class VertexKind { Disk, Sphere };
enum class EdgeClass { L, WhiteMinus, WhitePlus, D };
enum class EdgeLength { Finite, Zero, Broken };
enum class Target { Cobordism, Symplectization };
enum class End { Minus, Plus };

/// Structural problems with a building type.
class TypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TypeVertex {
  std::string id;
  VertexKind kind = VertexKind::Disk;
  long level = 0;
};

/// Leaf (one end) or internal edge (two ends, directed ends[0] -> ends[1]).
/// Chord edges joining two levels run from the lower to the upper level.
struct TypeEdge {
  std::string id;
  std::vector<std::string> ends;
  EdgeClass cls = EdgeClass::L;
  EdgeLength length = EdgeLength::Finite;
  std::optional<std::string> label;
  std::optional<Rational> action;
  /// Shared length of the chord edges between two levels, when finite.
  std::optional<Rational> lambda;
  /// For broken L edges: "crit" (critical point of f_L) or "black".
  std::optional<std::string> break_at;

  bool is_leaf() const { return ends.size() == 1; }
  bool is_chord() const { return cls == EdgeClass::WhiteMinus || cls == EdgeClass::WhitePlus; }
};

struct Decoration {
  Rational area;
  Rational chern;
  Rational y_minus;
  Rational y_plus;
  std::optional<Rational> maslov;
  /// Fredholm index of the vertex, supplied externally.
  long index = 0;
};

struct BuildingType {
  Target target = Target::Cobordism;
  std::vector<TypeVertex> vertices;
  std::vector<TypeEdge> edges;
  std::optional<std::map<std::string, Decoration>> decorations;

  const TypeVertex& vertex(const std::string& id) const;
  const TypeEdge& edge(const std::string& id) const;
};

const char* to_string(VertexKind k);
const char* to_string(EdgeClass c);
const char* to_string(EdgeLength l);
const char* to_string(Target t);
VertexKind parse_vertex_kind(const std::string& s);
EdgeClass parse_edge_class(const std::string& s);
EdgeLength parse_edge_length(const std::string& s);
Target parse_target(const std::string& s);

void validate(const BuildingType& t);

struct StabilityResult {
  bool stable = true;
  std::string witness;
  std::string reason;
};

StabilityResult is_stable(const BuildingType& t);

long domain_dim(const BuildingType& t);
/// domain_dim plus the sum of the vertex indices.
long total_dim(const BuildingType& t);

struct SphereStratumDim {
  Rational single_puncture;
  Rational cobordism_level;
  Rational log_pairing;
};

SphereStratumDim sphere_stratum_dim(const Rational& chern, const Rational& m, long e_black,
                                    long ambient_dim);

struct ActionBalance {
  Rational in_sum;
  Rational out_sum;
  Rational area;
  Rational defect;
  bool consistent = false;
  bool corollary_violation = false;
};

/// Vertex ids at one level.
std::vector<std::string> level_selection(const BuildingType& t, long level);
/// Empty selection means every vertex.
ActionBalance action_balance(const BuildingType& t, const std::vector<std::string>& selection = {});

struct IntersectionMultiplicity {
  Rational value;
  std::optional<Rational> decorated;
  bool matches = true;
};

IntersectionMultiplicity intersection_multiplicity(const BuildingType& t, End end,
                                                   const std::vector<std::string>& selection = {});

enum class StratumKind { TwoLevel, BrokenTrajectory, Fake };
const char* to_string(StratumKind k);

struct BoundaryStratum {
  StratumKind kind = StratumKind::TwoLevel;
  BuildingType type;
  std::string description;
  /// For fake strata: the one-dimensional strata containing it in their closure.
  std::vector<BuildingType> adjacent;
};

struct BoundaryStrata {
  std::vector<BoundaryStratum> true_strata;
  std::vector<BoundaryStratum> fake_strata;
};

BoundaryStrata boundary_strata(const BuildingType& t);

/// Isomorphism-invariant encoding ignoring ids.
std::string canonical_form(const BuildingType& t);

/// Edge e with zero length contracted, its endpoints merged.
BuildingType collapse_edge(const BuildingType& t, const std::string& edge_id);

struct Sheet {
  Rational weight;
  std::string id;
};

using PerturbationSheets = std::vector<Sheet>;

void validate_sheets(const PerturbationSheets& p);
/// Product sheets in row-major order, k1 * k2 of them, ids "(a,b)".
PerturbationSheets pullback_sheets(const PerturbationSheets& a, const PerturbationSheets& b);
/// Identical ids combined, first-occurrence order kept.
PerturbationSheets merge_sheets(const PerturbationSheets& p);
Rational total_weight(const PerturbationSheets& p);

struct ArcClass {
  std::string vertex;
  std::string component;
  std::vector<Integer> cls;
  bool reversed = false;
};

struct Capping {
  std::string component;
  std::vector<Integer> cls;
};

using ClassByComponent = std::map<std::string, std::vector<Integer>>;

/// Boundary class over the selected vertices (all when empty): arcs plus the
/// cappings of chord punctures, counted positively at outgoing punctures.
ClassByComponent boundary_class(const BuildingType& t, const std::vector<ArcClass>& arcs,
                                const std::map<std::string, Capping>& cappings, long rank,
                                const std::vector<std::string>& selection = {});

struct EnumerationLimits {
  std::size_t max_vertices = 4;
  std::size_t max_edges = 5;
  bool include_spheres = true;
  bool two_levels = true;
};

/// Every stable type within the limits up to isomorphism, sorted by canonical form.
std::vector<BuildingType> enumerate_types(const EnumerationLimits& limits);

}  // namespace lch
