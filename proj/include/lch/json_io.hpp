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

#include <json.hpp>

#include "lch/building.hpp"
#include "lch/chords.hpp"
#include "lch/fibered.hpp"
#include "lch/tameness.hpp"
#include "lch/toric.hpp"

namespace lch {

using Json = nlohmann::ordered_json;

/// Parse text into a JSON value, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

Rational rational_from_json(const Json& j);
Json to_json(const Rational& r);
Json to_json(const std::optional<Rational>& r);
Json to_json(const LatticeVector& v);
LatticeVector lattice_vector_from_json(const Json& j);
RationalVector rational_vector_from_json(const Json& j);
Json to_json(const RationalVector& v);

Polytope polytope_from_json(const Json& j);
Json to_json(const Polytope& p);
Json vertices_to_json(const Polytope& p);
Json to_json(const Face& f);
Json to_json(const ConePolytope& c);
Json to_json(const ReductionSlice& r);

FiberedContact fibered_from_json(const Json& j);
Json to_json(const FiberedContact& z);
Json to_json(const LiftResult& r);

Json to_json(const ChordComponent& c);
Json to_json(const ChordClass& c);
Json to_json(const GeneratorSet& g);

BuildingType building_from_json(const Json& j);
Json to_json(const BuildingType& t);
Json to_json(const StabilityResult& s);
Json to_json(const ActionBalance& a);
Json to_json(const BoundaryStrata& s);
Json to_json(const SphereStratumDim& s);

PerturbationSheets sheets_from_json(const Json& j);
Json to_json(const PerturbationSheets& p);

CobordismClassData cobordism_from_json(const Json& j);
Json to_json(const CobordismClassData& d);
Json to_json(const TamenessVerdict& v);

}  // namespace lch
