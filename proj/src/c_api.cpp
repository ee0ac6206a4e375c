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

#include "lch/lch.h"

#include <functional>
#include <string>

#include "lch/json_io.hpp"

struct lch_result {
  std::string json;
};

struct lch_polytope {
  lch::Polytope value;
};

struct lch_type {
  lch::BuildingType value;
};

namespace {

thread_local std::string g_last_error;

lch_status fail(lch_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

lch_status guard(const std::function<void()>& body) {
  g_last_error.clear();
  try {
    body();
    return LCH_OK;
  } catch (const lch::ParseError& e) {
    return fail(LCH_E_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LCH_E_INVALID, e.what());
  } catch (const std::domain_error& e) {
    return fail(LCH_E_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(LCH_E_INTERNAL, e.what());
  } catch (...) {
    return fail(LCH_E_INTERNAL, "unknown failure");
  }
}

lch_status emit(lch_result** out, const std::function<lch::Json()>& body) {
  if (!out) return fail(LCH_E_NULL, "null result pointer");
  *out = nullptr;
  return guard([&] { *out = new lch_result{body().dump()}; });
}

const char* need(const char* s, const char* what) {
  if (!s) throw lch::ParseError(std::string("missing ") + what);
  return s;
}

lch::Rational rational_arg(const char* s, const char* what) {
  return lch::Rational::parse(need(s, what));
}

}  // namespace

extern "C" {

const char* lch_version(void) { return "0.1.0"; }

const char* lch_status_name(lch_status s) {
  switch (s) {
    case LCH_OK: return "ok";
    case LCH_E_NULL: return "null-argument";
    case LCH_E_PARSE: return "parse-error";
    case LCH_E_INVALID: return "invalid-input";
    case LCH_E_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* lch_last_error(void) { return g_last_error.c_str(); }

const char* lch_result_json(const lch_result* r) { return r ? r->json.c_str() : nullptr; }

void lch_result_free(lch_result* r) { delete r; }

lch_status lch_polytope_parse(const char* json, lch_polytope** out) {
  if (!out) return fail(LCH_E_NULL, "null output pointer");
  *out = nullptr;
  return guard([&] {
    *out = new lch_polytope{lch::polytope_from_json(lch::parse_json(need(json, "polytope JSON")))};
  });
}

lch_status lch_polytope_simplex(long n, lch_polytope** out) {
  if (!out) return fail(LCH_E_NULL, "null output pointer");
  *out = nullptr;
  return guard([&] { *out = new lch_polytope{lch::standard_simplex(n)}; });
}

void lch_polytope_free(lch_polytope* p) { delete p; }

lch_status lch_polytope_inspect(const lch_polytope* p, lch_result** out) {
  if (!p) return fail(LCH_E_NULL, "null polytope");
  return emit(out, [&] {
    const auto& poly = p->value;
    bool bounded = poly.is_bounded();
    lch::Json j = {{"polytope", lch::to_json(poly)}, {"bounded", bounded}};
    if (bounded) {
      j["full_dimensional"] = poly.is_full_dimensional();
      j["vertices"] = lch::vertices_to_json(poly);
    }
    return j;
  });
}

lch_status lch_polytope_cone(const lch_polytope* p, lch_result** out) {
  if (!p) return fail(LCH_E_NULL, "null polytope");
  return emit(out, [&] { return lch::to_json(lch::cone_on(p->value)); });
}

lch_status lch_polytope_faces(const lch_polytope* p, lch_result** out) {
  if (!p) return fail(LCH_E_NULL, "null polytope");
  return emit(out, [&] {
    lch::Json a = lch::Json::array();
    for (const auto& f : lch::codim2_faces(p->value)) a.push_back(lch::to_json(f));
    return a;
  });
}

lch_status lch_reduce(const lch_polytope* p, long face_index, const char* lambda_json, lch_result** out) {
  if (!p) return fail(LCH_E_NULL, "null polytope");
  return emit(out, [&] {
    auto faces = lch::codim2_faces(p->value);
    if (face_index < 0 || static_cast<std::size_t>(face_index) >= faces.size()) {
      throw std::invalid_argument("face index out of range");
    }
    auto lambda = lch::rational_vector_from_json(lch::parse_json(need(lambda_json, "lambda")));
    auto cone = lch::cone_on(p->value);
    return lch::to_json(lch::reduction_slice(cone, faces[static_cast<std::size_t>(face_index)], lambda));
  });
}

lch_status lch_reduction_smoothness(const char* nu1_json, const char* nu2_json, lch_result** out) {
  return emit(out, [&] {
    auto a = lch::lattice_vector_from_json(lch::parse_json(need(nu1_json, "nu1")));
    auto b = lch::lattice_vector_from_json(lch::parse_json(need(nu2_json, "nu2")));
    return lch::Json{{"smooth", lch::reduction_smoothness(a, b)}};
  });
}

lch_status lch_smith_normal_form(const char* matrix_json, lch_result** out) {
  return emit(out, [&] {
    lch::Json j = lch::parse_json(need(matrix_json, "matrix"));
    if (!j.is_array()) throw lch::ParseError("matrix must be an array of rows");
    lch::IntegerMatrix m;
    for (const auto& row : j) m.push_back(lch::lattice_vector_from_json(row).entries());
    auto s = lch::smith_normal_form(m);
    return lch::Json{{"divisors", lch::to_json(lch::LatticeVector(s.divisors))}, {"rank", s.rank}};
  });
}

lch_status lch_lattice_basis(const char* vectors_json, lch_result** out) {
  return emit(out, [&] {
    lch::Json j = lch::parse_json(need(vectors_json, "vectors"));
    if (!j.is_array()) throw lch::ParseError("vectors must be an array");
    std::vector<lch::LatticeVector> vs;
    for (const auto& v : j) vs.push_back(lch::lattice_vector_from_json(v));
    return lch::Json{{"lattice_basis", lch::is_lattice_basis_of_span(vs)}};
  });
}

lch_status lch_lift(const char* areas_json, lch_result** out) {
  return emit(out, [&] {
    auto areas = lch::rational_vector_from_json(lch::parse_json(need(areas_json, "areas")));
    return lch::to_json(lch::lift_exists(areas));
  });
}

lch_status lch_holonomy(const char* area, lch_result** out) {
  return emit(out, [&] {
    return lch::Json{{"angle", lch::holonomy_of_disk(rational_arg(area, "area")).str()}};
  });
}

lch_status lch_fibered_construct(const char* op, const char* inputs_json, const char* param_json,
                                 lch_result** out) {
  return emit(out, [&] {
    std::string o = need(op, "operation");
    lch::Json in = lch::parse_json(need(inputs_json, "inputs"));
    if (!in.is_array()) throw lch::ParseError("inputs must be an array");
    std::vector<lch::FiberedContact> zs;
    for (const auto& z : in) zs.push_back(lch::fibered_from_json(z));
    auto count = [&](std::size_t n) {
      if (zs.size() != n) throw std::invalid_argument(o + " takes " + std::to_string(n) + " input(s)");
    };
    lch::FiberedContact r;
    if (o == "union") {
      r = lch::construct_union(zs);
    } else if (o == "tensor") {
      count(2);
      r = lch::construct_tensor(zs[0], zs[1]);
    } else if (o == "exterior_tensor") {
      count(2);
      r = lch::construct_exterior_tensor(zs[0], zs[1]);
    } else if (o == "finite_cover") {
      count(1);
      lch::Json p = lch::parse_json(need(param_json, "cover degree"));
      if (!p.is_number_integer()) throw lch::ParseError("cover degree must be an integer");
      r = lch::construct_finite_cover(zs[0], p.get<long>());
    } else if (o == "quotient") {
      count(1);
      lch::Json p = lch::parse_json(need(param_json, "group action"));
      lch::GroupAction g;
      if (!p.is_object() || !p.contains("name")) throw lch::ParseError("group action needs a name");
      g.name = p["name"].get<std::string>();
      if (p.contains("rank_reduction")) g.rank_reduction = p["rank_reduction"].get<long>();
      if (p.contains("reduced_tau_Y") && !p["reduced_tau_Y"].is_null()) {
        g.reduced_tau_y = lch::rational_from_json(p["reduced_tau_Y"]);
      }
      r = lch::construct_quotient(zs[0], g);
    } else {
      throw lch::ParseError("unknown construction '" + o + "'");
    }
    return lch::to_json(r);
  });
}

lch_status lch_fibered_tame(const char* fibered_json, lch_result** out) {
  return emit(out, [&] {
    auto z = lch::fibered_from_json(lch::parse_json(need(fibered_json, "fibered contact")));
    return lch::Json{{"tame", lch::tame_pair_check(z)}};
  });
}

lch_status lch_chords(long k, const char* max_action, int all_sheets, lch_result** out) {
  return emit(out, [&] {
    auto chords = lch::enumerate_chords(k, rational_arg(max_action, "max action"));
    lch::Json a = lch::Json::array();
    for (const auto& c : chords) {
      if (all_sheets) {
        for (const auto& comp : c.expand()) a.push_back(lch::to_json(comp));
      } else {
        a.push_back(lch::to_json(c));
      }
    }
    return a;
  });
}

lch_status lch_generators(long k, long rank, const char* max_action, lch_result** out) {
  return emit(out, [&] {
    lch::MorseModel morse;
    morse.rank = rank;
    return lch::to_json(lch::generator_set(k, morse, rational_arg(max_action, "max action")));
  });
}

namespace {

lch::Json tame_document(const lch::CobordismClassData& d) {
  return {{"data", lch::to_json(d)}, {"verdict", lch::to_json(lch::check_tame(d))}};
}

}  // namespace

lch_status lch_tame(const char* cobordism_json, lch_result** out) {
  return emit(out, [&] {
    return tame_document(lch::cobordism_from_json(lch::parse_json(need(cobordism_json, "cobordism data"))));
  });
}

lch_status lch_tame_builtin(const char* name, long n, lch_result** out) {
  return emit(out, [&] { return tame_document(lch::builtin_cobordism(need(name, "built-in name"), n)); });
}

lch_status lch_tame_truncation(const char* tau_y, const char* tau_z, const char* w1, const char* w2,
                               lch_result** out) {
  return emit(out, [&] {
    return tame_document(lch::symplectization_truncation(rational_arg(tau_y, "tau_Y"),
                                                         rational_arg(tau_z, "tau_Z"),
                                                         rational_arg(w1, "w1"), rational_arg(w2, "w2")));
  });
}

lch_status lch_type_parse(const char* json, lch_type** out) {
  if (!out) return fail(LCH_E_NULL, "null output pointer");
  *out = nullptr;
  return guard([&] {
    auto t = lch::building_from_json(lch::parse_json(need(json, "type JSON")));
    try {
      lch::validate(t);
    } catch (const lch::TypeError& e) {
      throw lch::ParseError(e.what());
    }
    *out = new lch_type{std::move(t)};
  });
}

void lch_type_free(lch_type* t) { delete t; }

lch_status lch_type_dim(const lch_type* t, lch_result** out) {
  if (!t) return fail(LCH_E_NULL, "null type");
  return emit(out, [&] {
    auto s = lch::is_stable(t->value);
    lch::Json j = {{"stability", lch::to_json(s)}};
    if (s.stable) {
      j["domain_dim"] = lch::domain_dim(t->value);
      j["total_dim"] = lch::total_dim(t->value);
    }
    j["canonical_form"] = lch::canonical_form(t->value);
    return j;
  });
}

lch_status lch_type_strata(const lch_type* t, lch_result** out) {
  if (!t) return fail(LCH_E_NULL, "null type");
  return emit(out, [&] { return lch::to_json(lch::boundary_strata(t->value)); });
}

lch_status lch_type_balance(const lch_type* t, const char* level_json, lch_result** out) {
  if (!t) return fail(LCH_E_NULL, "null type");
  return emit(out, [&] {
    std::vector<std::string> sel;
    if (level_json) {
      lch::Json l = lch::parse_json(level_json);
      if (!l.is_null()) {
        if (!l.is_number_integer()) throw lch::ParseError("level must be an integer");
        sel = lch::level_selection(t->value, l.get<long>());
        if (sel.empty()) throw std::invalid_argument("no vertices on that level");
      }
    }
    lch::Json j = lch::to_json(lch::action_balance(t->value, sel));
    auto minus = lch::intersection_multiplicity(t->value, lch::End::Minus, sel);
    auto plus = lch::intersection_multiplicity(t->value, lch::End::Plus, sel);
    j["multiplicity_minus"] = {{"value", minus.value.str()}, {"decorated", lch::to_json(minus.decorated)},
                               {"matches", minus.matches}};
    j["multiplicity_plus"] = {{"value", plus.value.str()}, {"decorated", lch::to_json(plus.decorated)},
                              {"matches", plus.matches}};
    return j;
  });
}

lch_status lch_type_no_cap(const lch_type* t, const char* cobordism_json, lch_result** out) {
  if (!t) return fail(LCH_E_NULL, "null type");
  return emit(out, [&] {
    auto d = lch::cobordism_from_json(lch::parse_json(need(cobordism_json, "cobordism data")));
    auto r = lch::no_cap_filter(t->value, d);
    lch::Json j = {{"admitted", r.admitted}};
    if (!r.admitted) {
      j["vertex"] = r.vertex;
      j["reason"] = r.reason;
    }
    return j;
  });
}

lch_status lch_sphere_dim(const char* chern, const char* m, long e_black, long ambient_dim, lch_result** out) {
  return emit(out, [&] {
    return lch::to_json(lch::sphere_stratum_dim(rational_arg(chern, "chern"), rational_arg(m, "m"), e_black,
                                                ambient_dim));
  });
}

lch_status lch_sheets(const char* p1_json, const char* p2_json, int merge, lch_result** out) {
  return emit(out, [&] {
    auto a = lch::sheets_from_json(lch::parse_json(need(p1_json, "first sheets")));
    auto b = lch::sheets_from_json(lch::parse_json(need(p2_json, "second sheets")));
    auto p = lch::pullback_sheets(a, b);
    lch::Json j = {{"count", p.size()}};
    if (merge) p = lch::merge_sheets(p);
    j["sheets"] = lch::to_json(p);
    j["total_weight"] = lch::total_weight(p).str();
    return j;
  });
}

}  // extern "C"
