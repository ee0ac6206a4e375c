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

/* C interface to the lch library. Every call returns an lch_status; rich
 * results come back as JSON text owned by an lch_result handle. Rationals in
 * JSON are "p/q" strings. */
#ifndef LCH_LCH_H_
#define LCH_LCH_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(LCH_BUILDING)
#define LCH_API __attribute__((visibility("default")))
#else
#define LCH_API
#endif

typedef enum lch_status {
  LCH_OK = 0,
  LCH_E_NULL = 1,     /* a required pointer argument was null */
  LCH_E_PARSE = 2,    /* malformed JSON, rational or enum text */
  LCH_E_INVALID = 3,  /* well-formed input violating a precondition */
  LCH_E_INTERNAL = 4
} lch_status;

typedef struct lch_result lch_result;
typedef struct lch_polytope lch_polytope;
typedef struct lch_type lch_type;

LCH_API const char* lch_version(void);
LCH_API const char* lch_status_name(lch_status s);

/* Message of the most recent failure on this thread, or "". */
LCH_API const char* lch_last_error(void);

LCH_API const char* lch_result_json(const lch_result* r);
LCH_API void lch_result_free(lch_result* r);

/* Polytopes: {"dim": d, "facets": [{"normal": [..], "offset": "p/q"}]}. */
LCH_API lch_status lch_polytope_parse(const char* json, lch_polytope** out);
LCH_API lch_status lch_polytope_simplex(long n, lch_polytope** out);
LCH_API void lch_polytope_free(lch_polytope* p);
LCH_API lch_status lch_polytope_inspect(const lch_polytope* p, lch_result** out);
LCH_API lch_status lch_polytope_cone(const lch_polytope* p, lch_result** out);
LCH_API lch_status lch_polytope_faces(const lch_polytope* p, lch_result** out);
/* face_index refers to the list returned by lch_polytope_faces;
 * lambda_json is an array of rationals. */
LCH_API lch_status lch_reduce(const lch_polytope* p, long face_index, const char* lambda_json,
                              lch_result** out);
LCH_API lch_status lch_reduction_smoothness(const char* nu1_json, const char* nu2_json,
                                            lch_result** out);

/* Lattice substrate: integer matrix as an array of rows. */
LCH_API lch_status lch_smith_normal_form(const char* matrix_json, lch_result** out);
LCH_API lch_status lch_lattice_basis(const char* vectors_json, lch_result** out);

/* Fibered contact data and lifts. */
LCH_API lch_status lch_lift(const char* areas_json, lch_result** out);
LCH_API lch_status lch_holonomy(const char* area, lch_result** out);
/* op: union | exterior_tensor | tensor | finite_cover | quotient.
 * inputs_json: array of fibered contact documents; param_json: the cover
 * degree for finite_cover, the group action for quotient, else null. */
LCH_API lch_status lch_fibered_construct(const char* op, const char* inputs_json,
                                         const char* param_json, lch_result** out);
LCH_API lch_status lch_fibered_tame(const char* fibered_json, lch_result** out);

/* Reeb chords and generators. */
LCH_API lch_status lch_chords(long k, const char* max_action, int all_sheets, lch_result** out);
LCH_API lch_status lch_generators(long k, long rank, const char* max_action, lch_result** out);

/* Tameness. The result carries {"data": ..., "verdict": ...}. */
LCH_API lch_status lch_tame(const char* cobordism_json, lch_result** out);
LCH_API lch_status lch_tame_builtin(const char* name, long n, lch_result** out);
LCH_API lch_status lch_tame_truncation(const char* tau_y, const char* tau_z, const char* w1,
                                       const char* w2, lch_result** out);

/* Building types. */
LCH_API lch_status lch_type_parse(const char* json, lch_type** out);
LCH_API void lch_type_free(lch_type* t);
LCH_API lch_status lch_type_dim(const lch_type* t, lch_result** out);
LCH_API lch_status lch_type_strata(const lch_type* t, lch_result** out);
/* level_json: null for the whole type, else an integer level. */
LCH_API lch_status lch_type_balance(const lch_type* t, const char* level_json, lch_result** out);
LCH_API lch_status lch_type_no_cap(const lch_type* t, const char* cobordism_json, lch_result** out);
LCH_API lch_status lch_sphere_dim(const char* chern, const char* m, long e_black, long ambient_dim,
                                  lch_result** out);

/* Perturbation sheets: arrays of {"weight": "p/q", "id": "..."}. */
LCH_API lch_status lch_sheets(const char* p1_json, const char* p2_json, int merge, lch_result** out);

#ifdef __cplusplus
}
#endif

#endif /* LCH_LCH_H_ */
