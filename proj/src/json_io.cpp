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

#include "lch/json_io.hpp"

namespace lch {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object containing '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object for '") + key + "'");
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

long integer_of(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long>();
}

bool bool_of(const Json& j, const char* what) {
  if (!j.is_boolean()) throw ParseError(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

Json integers(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) {
      a.push_back(x.get_si());
    } else {
      a.push_back(x.get_str());
    }
  }
  return a;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Rational r = Rational::parse(j.get<std::string>());
    if (!r.is_integer()) throw ParseError("expected an integer, got " + r.str());
    return r.num();
  }
  throw ParseError("expected an integer");
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rationals are written as \"p/q\" strings or integers, got " + j.dump());
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const std::optional<Rational>& r) { return r ? Json(r->str()) : Json(nullptr); }

Json to_json(const LatticeVector& v) { return integers(v.entries()); }

LatticeVector lattice_vector_from_json(const Json& j) {
  std::vector<Integer> e;
  for (const auto& x : array_of(j, "integer vector")) e.push_back(integer_from_json(x));
  return LatticeVector(std::move(e));
}

RationalVector rational_vector_from_json(const Json& j) {
  RationalVector v;
  for (const auto& x : array_of(j, "rational vector")) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Polytope polytope_from_json(const Json& j) {
  long dim = integer_of(require(j, "dim"), "dim");
  if (dim < 0) throw ParseError("dim must be nonnegative");
  std::vector<Facet> facets;
  for (const auto& f : array_of(require(j, "facets"), "facets")) {
    facets.push_back({lattice_vector_from_json(require(f, "normal")),
                      rational_from_json(require(f, "offset"))});
  }
  try {
    return Polytope(static_cast<std::size_t>(dim), std::move(facets));
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Polytope& p) {
  Json facets = Json::array();
  for (const auto& f : p.facets()) facets.push_back({{"normal", to_json(f.normal)}, {"offset", f.offset.str()}});
  return {{"dim", p.dim()}, {"facets", facets}};
}

Json vertices_to_json(const Polytope& p) {
  Json out = Json::array();
  for (const auto& v : p.vertices()) out.push_back({{"point", to_json(v.point)}, {"tight", v.tight}});
  return out;
}

Json to_json(const Face& f) {
  Json verts = Json::array();
  for (const auto& v : f.vertices) verts.push_back(to_json(v));
  return {{"active", f.active}, {"dim", f.dim}, {"vertices", verts}};
}

Json to_json(const ConePolytope& c) {
  Json j = to_json(c.cone);
  j["base"] = to_json(c.base);
  return j;
}

Json to_json(const ReductionSlice& r) {
  return {{"reduced", to_json(r.reduced)},
          {"smooth", r.smooth},
          {"nu1", to_json(r.nu1)},
          {"nu2", to_json(r.nu2)},
          {"h1_normal", to_json(r.h1_normal)},
          {"lambda1", to_json(r.lambda1)},
          {"u0", r.u0.str()},
          {"filling_line", {{"lambda", to_json(r.lambda)}, {"s_min", r.s_min.str()}, {"s_max", r.s_max.str()}}}};
}

namespace {

FiberedComponent component_from_json(const Json& j) {
  FiberedComponent c;
  const Json& base = require(j, "base");
  c.base.name = string_of(require(base, "name"), "base.name");
  if (const Json* r = optional_field(base, "h2_rank")) c.base.h2_rank = integer_of(*r, "h2_rank");
  if (const Json* p = optional_field(base, "polytope")) c.base.polytope = polytope_from_json(*p);
  c.tau_z = rational_from_json(require(j, "tau_Z"));
  if (const Json* y = optional_field(j, "tau_Y")) c.tau_y = rational_from_json(*y);
  if (c.tau_z.sign() <= 0) throw ParseError("tau_Z must be positive");
  return c;
}

Json component_to_json(const FiberedComponent& c) {
  Json base = {{"name", c.base.name}, {"h2_rank", c.base.h2_rank}};
  if (c.base.polytope) base["polytope"] = to_json(*c.base.polytope);
  return {{"base", base}, {"tau_Z", c.tau_z.str()}, {"tau_Y", to_json(c.tau_y)}};
}

}  // namespace

FiberedContact fibered_from_json(const Json& j) {
  FiberedContact z;
  if (const Json* comps = optional_field(j, "components")) {
    for (const auto& c : array_of(*comps, "components")) z.components.push_back(component_from_json(c));
  } else {
    z.components.push_back(component_from_json(j));
  }
  return z;
}

Json to_json(const FiberedContact& z) {
  Json comps = Json::array();
  for (const auto& c : z.components) comps.push_back(component_to_json(c));
  return {{"components", comps}};
}

Json to_json(const LiftResult& r) {
  return {{"exists", r.exists},
          {"fiber_order_divisor", r.fiber_order_divisor.get_str()},
          {"generator", to_json(r.generator)}};
}

Json to_json(const ChordComponent& c) {
  return {{"k", c.k}, {"d", (c.end_sheet - c.start_sheet + c.k) % c.k}, {"m", c.m},
          {"action", c.action.str()}, {"start_sheet", c.start_sheet}, {"end_sheet", c.end_sheet}};
}

Json to_json(const ChordClass& c) {
  return {{"k", c.k}, {"d", c.d}, {"m", c.m}, {"action", c.action.str()},
          {"start_sheet", 0}, {"end_sheet", c.d}};
}

Json to_json(const GeneratorSet& g) {
  Json white = Json::array(), black = Json::array();
  for (const auto& w : g.white) {
    white.push_back({{"d", w.chord.d}, {"m", w.chord.m}, {"action", w.chord.action.str()},
                     {"critical_point", w.critical.label}, {"index", w.critical.index}});
  }
  for (const auto& b : g.black) black.push_back({{"critical_point", b.label}, {"index", b.index}});
  return {{"white", white}, {"black", black}, {"total", g.size()}};
}

BuildingType building_from_json(const Json& j) {
  BuildingType t;
  try {
    if (const Json* tg = optional_field(j, "target")) t.target = parse_target(string_of(*tg, "target"));
    for (const auto& v : array_of(require(j, "vertices"), "vertices")) {
      TypeVertex x;
      x.id = string_of(require(v, "id"), "vertex id");
      x.kind = parse_vertex_kind(string_of(require(v, "kind"), "vertex kind"));
      x.level = integer_of(require(v, "level"), "vertex level");
      t.vertices.push_back(std::move(x));
    }
    for (const auto& e : array_of(require(j, "edges"), "edges")) {
      TypeEdge x;
      x.id = string_of(require(e, "id"), "edge id");
      for (const auto& end : array_of(require(e, "ends"), "ends")) x.ends.push_back(string_of(end, "edge end"));
      x.cls = parse_edge_class(string_of(require(e, "class"), "edge class"));
      if (const Json* l = optional_field(e, "length")) x.length = parse_edge_length(string_of(*l, "length"));
      if (const Json* l = optional_field(e, "label")) x.label = string_of(*l, "label");
      if (const Json* a = optional_field(e, "action")) x.action = rational_from_json(*a);
      if (const Json* a = optional_field(e, "lambda")) x.lambda = rational_from_json(*a);
      if (const Json* b = optional_field(e, "break_at")) x.break_at = string_of(*b, "break_at");
      if (const Json* b = optional_field(e, "breakings")) {
        long k = integer_of(*b, "breakings");
        if (k < 0 || k > 1) throw ParseError("an interval carries at most one breaking");
        if ((k == 1) != (x.length == EdgeLength::Broken)) {
          throw ParseError("breakings must be 1 exactly for broken edges");
        }
      }
      t.edges.push_back(std::move(x));
    }
    if (const Json* decs = optional_field(j, "decorations")) {
      if (!decs->is_object()) throw ParseError("decorations must be an object");
      std::map<std::string, Decoration> m;
      for (auto it = decs->begin(); it != decs->end(); ++it) {
        const Json& d = it.value();
        Decoration x;
        x.area = rational_from_json(require(d, "area"));
        x.chern = rational_from_json(require(d, "chern"));
        x.y_minus = rational_from_json(require(d, "y-"));
        x.y_plus = rational_from_json(require(d, "y+"));
        if (const Json* ms = optional_field(d, "maslov")) x.maslov = rational_from_json(*ms);
        if (const Json* ix = optional_field(d, "index")) x.index = integer_of(*ix, "index");
        m[it.key()] = x;
      }
      t.decorations = std::move(m);
    }
  } catch (const TypeError& e) {
    throw ParseError(e.what());
  }
  return t;
}

Json to_json(const BuildingType& t) {
  Json vs = Json::array(), es = Json::array();
  for (const auto& v : t.vertices) vs.push_back({{"id", v.id}, {"kind", to_string(v.kind)}, {"level", v.level}});
  for (const auto& e : t.edges) {
    Json x = {{"id", e.id}, {"ends", e.ends}, {"class", to_string(e.cls)}, {"length", to_string(e.length)}};
    if (e.label) x["label"] = *e.label;
    if (e.action) x["action"] = e.action->str();
    if (e.lambda) x["lambda"] = e.lambda->str();
    if (e.break_at) x["break_at"] = *e.break_at;
    es.push_back(std::move(x));
  }
  Json out = {{"target", to_string(t.target)}, {"vertices", vs}, {"edges", es}};
  if (t.decorations) {
    Json d = Json::object();
    for (const auto& [id, x] : *t.decorations) {
      Json y = {{"area", x.area.str()}, {"chern", x.chern.str()}, {"y-", x.y_minus.str()},
                {"y+", x.y_plus.str()}, {"index", x.index}};
      if (x.maslov) y["maslov"] = x.maslov->str();
      d[id] = y;
    }
    out["decorations"] = d;
  }
  return out;
}

Json to_json(const StabilityResult& s) {
  Json j = {{"stable", s.stable}};
  if (!s.stable) {
    j["witness"] = s.witness;
    j["reason"] = s.reason;
  }
  return j;
}

Json to_json(const ActionBalance& a) {
  return {{"in_sum", a.in_sum.str()}, {"out_sum", a.out_sum.str()}, {"area", a.area.str()},
          {"defect", a.defect.str()}, {"consistent", a.consistent},
          {"corollary_violation", a.corollary_violation}};
}

Json to_json(const BoundaryStrata& s) {
  auto list = [](const std::vector<BoundaryStratum>& v) {
    Json a = Json::array();
    for (const auto& x : v) {
      Json j = {{"kind", to_string(x.kind)}, {"description", x.description}, {"type", to_json(x.type)}};
      if (!x.adjacent.empty()) {
        Json adj = Json::array();
        for (const auto& t : x.adjacent) adj.push_back(to_json(t));
        j["adjacent"] = adj;
      }
      a.push_back(std::move(j));
    }
    return a;
  };
  return {{"true", list(s.true_strata)}, {"fake", list(s.fake_strata)}};
}

Json to_json(const SphereStratumDim& s) {
  return {{"single_puncture", s.single_puncture.str()},
          {"cobordism_level", s.cobordism_level.str()},
          {"log_pairing", s.log_pairing.str()}};
}

PerturbationSheets sheets_from_json(const Json& j) {
  PerturbationSheets p;
  for (const auto& s : array_of(j, "sheets")) {
    p.push_back({rational_from_json(require(s, "weight")), string_of(require(s, "id"), "sheet id")});
  }
  return p;
}

Json to_json(const PerturbationSheets& p) {
  Json a = Json::array();
  for (const auto& s : p) a.push_back({{"weight", s.weight.str()}, {"id", s.id}});
  return a;
}

namespace {

std::optional<EndData> end_from_json(const Json& j, const char* key) {
  const Json* e = optional_field(j, key);
  if (!e) return std::nullopt;
  return EndData{rational_from_json(require(*e, "tau_Y")), rational_from_json(require(*e, "tau_Z"))};
}

Json end_to_json(const std::optional<EndData>& e) {
  if (!e) return nullptr;
  return {{"tau_Y", e->tau_y.str()}, {"tau_Z", e->tau_z.str()}};
}

}  // namespace

CobordismClassData cobordism_from_json(const Json& j) {
  CobordismClassData d;
  if (const Json* n = optional_field(j, "name")) d.name = string_of(*n, "name");
  for (const auto& c : array_of(require(j, "classes"), "classes")) {
    AbsoluteClass x;
    x.name = string_of(require(c, "name"), "class name");
    x.omega = rational_from_json(require(c, "omega"));
    x.c1 = rational_from_json(require(c, "c1"));
    x.y_minus = rational_from_json(require(c, "y_minus"));
    x.y_plus = rational_from_json(require(c, "y_plus"));
    if (const Json* a = optional_field(c, "avoids_y_plus")) x.avoids_y_plus = bool_of(*a, "avoids_y_plus");
    d.classes.push_back(std::move(x));
  }
  if (const Json* rel = optional_field(j, "relative")) {
    for (const auto& c : array_of(*rel, "relative")) {
      d.relative.push_back({string_of(require(c, "name"), "class name"), rational_from_json(require(c, "omega")),
                            rational_from_json(require(c, "y_plus"))});
    }
  }
  d.outgoing_end_nonempty = bool_of(require(j, "outgoing_end_nonempty"), "outgoing_end_nonempty");
  if (const Json* f = optional_field(j, "integral_symplectic_class")) {
    d.integral_symplectic_class = bool_of(*f, "integral_symplectic_class");
  }
  if (const Json* f = optional_field(j, "simply_connected")) d.simply_connected = bool_of(*f, "simply_connected");
  d.negative_end = end_from_json(j, "negative_end");
  d.positive_end = end_from_json(j, "positive_end");
  return d;
}

Json to_json(const CobordismClassData& d) {
  Json classes = Json::array(), rel = Json::array();
  for (const auto& c : d.classes) {
    classes.push_back({{"name", c.name}, {"omega", c.omega.str()}, {"c1", c.c1.str()},
                       {"y_minus", c.y_minus.str()}, {"y_plus", c.y_plus.str()},
                       {"avoids_y_plus", c.avoids_y_plus}});
  }
  for (const auto& c : d.relative) {
    rel.push_back({{"name", c.name}, {"omega", c.omega.str()}, {"y_plus", c.y_plus.str()}});
  }
  return {{"name", d.name},
          {"classes", classes},
          {"relative", rel},
          {"outgoing_end_nonempty", d.outgoing_end_nonempty},
          {"integral_symplectic_class", d.integral_symplectic_class},
          {"simply_connected", d.simply_connected},
          {"negative_end", end_to_json(d.negative_end)},
          {"positive_end", end_to_json(d.positive_end)}};
}

Json to_json(const TamenessVerdict& v) {
  Json cert = Json::array();
  for (const auto& c : v.certificate) {
    cert.push_back({{"name", c.name}, {"table", c.table}, {"omega", c.omega.str()},
                    {"value", c.value.str()}, {"residual", c.residual.str()}});
  }
  return {{"p1", v.p1},
          {"p2", v.p2},
          {"lambda_minus", to_json(v.lambda_minus)},
          {"p3", to_string(v.p3)},
          {"lambda_plus", to_json(v.lambda_plus)},
          {"ends_tame", v.ends_tame},
          {"overall", v.overall},
          {"certificate", cert}};
}

}  // namespace lch
