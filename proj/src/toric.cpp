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

#include "lch/toric.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lch {

namespace {

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rational slack(const Facet& f, const RationalVector& x) { return dot(f.normal, x) + f.offset; }

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

Polytope::Polytope(std::size_t dim, std::vector<Facet> facets)
    : dim_(dim), facets_(std::move(facets)) {
  for (const auto& f : facets_) {
    if (f.normal.dim() != dim_) throw DimensionError("facet normal has wrong dimension");
    if (!f.normal.is_primitive()) {
      throw DimensionError("facet normal " + f.normal.str() + " is not primitive");
    }
  }
}

bool Polytope::contains(const RationalVector& x) const {
  if (x.size() != dim_) throw DimensionError("point has wrong dimension");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return slack(f, x).sign() >= 0; });
}

bool Polytope::strictly_contains(const RationalVector& x) const {
  if (x.size() != dim_) throw DimensionError("point has wrong dimension");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return slack(f, x).sign() > 0; });
}

std::vector<std::size_t> Polytope::tight_at(const RationalVector& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (slack(facets_[i], x).is_zero()) out.push_back(i);
  }
  return out;
}

bool Polytope::is_bounded() const {
  if (dim_ == 0) return true;
  std::vector<LatticeVector> normals;
  for (const auto& f : facets_) normals.push_back(f.normal);
  RationalMatrix n = RationalMatrix::from_lattice_rows(normals);
  if (normals.empty() || n.rank() < dim_) return false;
  // The recession cone {x : N x >= 0} is pointed; it is trivial iff it has
  // no extreme ray, and every extreme ray is cut out by d - 1 rows.
  bool bounded = true;
  for_each_subset(facets_.size(), dim_ - 1, [&](const std::vector<std::size_t>& rows) {
    if (!bounded) return;
    RationalMatrix m(rows.size(), dim_);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < dim_; ++c) m.at(r, c) = Rational(facets_[rows[r]].normal[c]);
    }
    auto ns = m.nullspace();
    if (ns.size() != 1) return;
    for (int sgn : {1, -1}) {
      RationalVector ray = ns[0];
      if (sgn < 0) {
        for (auto& x : ray) x = -x;
      }
      bool ok = std::all_of(facets_.begin(), facets_.end(),
                            [&](const Facet& f) { return dot(f.normal, ray).sign() >= 0; });
      if (ok) bounded = false;
    }
  });
  return bounded;
}

std::vector<Vertex> Polytope::vertices() const {
  std::vector<Vertex> out;
  if (dim_ == 0) {
    bool ok = std::all_of(facets_.begin(), facets_.end(),
                          [](const Facet& f) { return f.offset.sign() >= 0; });
    if (ok) out.push_back({{}, {}});
    return out;
  }
  std::set<RationalVector> seen;
  for_each_subset(facets_.size(), dim_, [&](const std::vector<std::size_t>& rows) {
    RationalMatrix m(dim_, dim_);
    RationalVector b(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = 0; c < dim_; ++c) m.at(r, c) = Rational(facets_[rows[r]].normal[c]);
      b[r] = -facets_[rows[r]].offset;
    }
    if (m.rank() != dim_) return;
    auto x = m.solve(b);
    if (!x || !contains(*x)) return;
    if (seen.insert(*x).second) out.push_back({*x, tight_at(*x)});
  });
  std::sort(out.begin(), out.end(),
            [](const Vertex& a, const Vertex& b) { return a.point < b.point; });
  return out;
}

bool Polytope::is_empty() const { return vertices().empty(); }

bool Polytope::is_full_dimensional() const {
  if (!is_bounded()) return false;
  std::vector<RationalVector> pts;
  for (const auto& v : vertices()) pts.push_back(v.point);
  return affine_dimension(pts) == static_cast<long>(dim_);
}

std::vector<Facet> Polytope::sorted_facets() const {
  std::vector<Facet> f = facets_;
  std::sort(f.begin(), f.end());
  return f;
}

long affine_dimension(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  if (diffs.empty()) return 0;
  return static_cast<long>(RationalMatrix::from_rows(diffs, points[0].size()).rank());
}

Polytope ConePolytope::slice(const Rational& s) const {
  if (s.sign() <= 0) throw DimensionError("slice height must be positive");
  const std::size_t d = base.dim();
  std::vector<Facet> facets;
  for (const auto& f : cone.facets()) {
    std::vector<Integer> head(f.normal.entries().begin(), f.normal.entries().begin() + d);
    LatticeVector nu(head);
    Integer g = nu.content();
    if (g == 0) continue;
    for (auto& e : head) e /= g;
    facets.push_back({LatticeVector(head), s * Rational(f.normal[d]) / Rational(g)});
  }
  return Polytope(d, std::move(facets));
}

Polytope standard_simplex(long n) {
  if (n <= 0) throw DimensionError("simplex needs n >= 1");
  const std::size_t d = static_cast<std::size_t>(n - 1);
  std::vector<Facet> facets;
  if (d == 0) return Polytope(0, {});
  for (std::size_t i = 0; i < d; ++i) {
    LatticeVector e(d);
    e[i] = 1;
    facets.push_back({e, Rational(0)});
  }
  LatticeVector all(d);
  for (std::size_t i = 0; i < d; ++i) all[i] = -1;
  facets.push_back({all, Rational(1)});
  return Polytope(d, std::move(facets));
}

RationalVector simplex_barycenter(long n) {
  if (n <= 0) throw DimensionError("simplex needs n >= 1");
  return RationalVector(static_cast<std::size_t>(n), Rational(Integer(1), Integer(n)));
}

Polytope anticanonical_polytope(std::size_t dim, const std::vector<LatticeVector>& normals) {
  std::vector<Facet> facets;
  for (const auto& n : normals) facets.push_back({n, Rational(1)});
  return Polytope(dim, std::move(facets));
}

ConePolytope cone_on(const Polytope& p) {
  if (!p.is_bounded()) throw DimensionError("cone requires a bounded polytope");
  if (p.is_empty()) throw DimensionError("cone requires a nonempty polytope");
  for (const auto& f : p.facets()) {
    if (f.offset.sign() < 0) throw DimensionError("cone requires 0 in the polytope");
  }
  const std::size_t d = p.dim();
  ConePolytope out;
  out.base = p;
  std::vector<Facet> facets;
  for (const auto& f : p.facets()) {
    RationalVector h = to_rational(f.normal);
    h.push_back(f.offset);
    out.base_facet_index.push_back(facets.size());
    facets.push_back({primitive_direction(h), Rational(0)});
  }
  // Negative heights are excluded by the homogenized facets unless the
  // reflected system {<x, nu> <= -c} is solvable; add s >= 0 in that case.
  std::vector<Facet> reflected;
  for (const auto& f : p.facets()) {
    std::vector<Integer> e = f.normal.entries();
    for (auto& x : e) x = -x;
    reflected.push_back({LatticeVector(e), -f.offset});
  }
  Polytope neg(d, reflected);
  bool needs_height = d == 0 || neg.is_bounded() ? !neg.is_empty() : true;
  if (needs_height) {
    LatticeVector up(d + 1);
    up[d] = 1;
    facets.push_back({up, Rational(0)});
  }
  out.cone = Polytope(d + 1, std::move(facets));
  return out;
}

std::vector<Face> codim2_faces(const Polytope& p) {
  const std::size_t d = p.dim();
  if (d < 2) return {};
  if (!p.is_full_dimensional()) throw DimensionError("codim2_faces requires a full-dimensional polytope");
  auto verts = p.vertices();
  std::set<std::vector<std::size_t>> seen;
  std::vector<Face> out;
  const std::size_t m = p.facets().size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<const Vertex*> on;
      for (const auto& v : verts) {
        bool ti = std::binary_search(v.tight.begin(), v.tight.end(), i);
        bool tj = std::binary_search(v.tight.begin(), v.tight.end(), j);
        if (ti && tj) on.push_back(&v);
      }
      std::vector<RationalVector> pts;
      for (auto* v : on) pts.push_back(v->point);
      if (affine_dimension(pts) != static_cast<long>(d) - 2) continue;
      std::vector<std::size_t> active = on.front()->tight;
      for (auto* v : on) {
        std::vector<std::size_t> next;
        std::set_intersection(active.begin(), active.end(), v->tight.begin(), v->tight.end(),
                              std::back_inserter(next));
        active = std::move(next);
      }
      if (!seen.insert(active).second) continue;
      out.push_back({active, d - 2, pts});
    }
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) { return a.active < b.active; });
  return out;
}

bool reduction_smoothness(const LatticeVector& nu1, const LatticeVector& nu2) {
  if (nu1.dim() != nu2.dim()) throw DimensionError("normals have different dimensions");
  std::vector<Integer> s, a, b;
  for (std::size_t i = 0; i < nu1.dim(); ++i) {
    s.push_back(nu1[i] + nu2[i]);
    a.push_back(nu1[i]);
    b.push_back(nu2[i]);
  }
  s.emplace_back(0);
  a.emplace_back(1);
  b.emplace_back(1);
  return is_lattice_basis_of_span({LatticeVector(s), LatticeVector(a), LatticeVector(b)});
}

ReductionSlice reduction_slice(const ConePolytope& c, const Face& q, const RationalVector& lambda) {
  const Polytope& p = c.base;
  const std::size_t d = p.dim();
  if (lambda.size() != d) throw DimensionError("lambda has wrong dimension");
  if (d < 2 || q.dim + 2 != d || q.active.size() != 2) {
    throw DimensionError("face is not a codimension-two face cut out by two facets");
  }
  const Facet& f1 = p.facets().at(q.active[0]);
  const Facet& f2 = p.facets().at(q.active[1]);
  if (f1.offset.sign() <= 0 || f2.offset.sign() <= 0) {
    throw DimensionError("hull(Q, 0) is degenerate: face facets pass through 0");
  }
  Rational t1 = -dot(f1.normal, lambda) / f1.offset;
  Rational t2 = -dot(f2.normal, lambda) / f2.offset;
  if (t1 != t2 || t1.sign() <= 0 || t1 >= Rational(1)) {
    throw DimensionError("lambda is not in the interior of hull(Q, 0)");
  }
  const Rational t = t1;
  RationalVector qpt = lambda;
  for (auto& x : qpt) x /= t;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    if (i == q.active[0] || i == q.active[1]) continue;
    if (slack(p.facets()[i], qpt).sign() <= 0) {
      throw DimensionError("lambda is not in the interior of hull(Q, 0)");
    }
  }

  ReductionSlice out;
  out.nu1 = f1.normal;
  out.nu2 = f2.normal;
  out.smooth = reduction_smoothness(f1.normal, f2.normal);
  out.lambda = lambda;
  out.s_min = t;
  out.s_max = Rational(1);

  RationalVector s = to_rational(f1.normal), diff = to_rational(f1.normal);
  for (std::size_t i = 0; i < d; ++i) {
    s[i] += Rational(f2.normal[i]);
    diff[i] -= Rational(f2.normal[i]);
  }
  Rational ss = dot(s, s);
  RationalVector w = diff;
  if (!ss.is_zero()) {
    Rational k = dot(diff, s) / ss;
    for (std::size_t i = 0; i < d; ++i) w[i] -= k * s[i];
  }
  out.h1_normal = primitive_direction(w);
  RationalVector wq = to_rational(out.h1_normal);
  Rational ww = dot(wq, wq);
  out.u0 = dot(lambda, wq) / ww;
  out.lambda1 = lambda;
  for (std::size_t i = 0; i < d; ++i) out.lambda1[i] -= out.u0 * wq[i];

  std::vector<Facet> facets;
  for (const auto& f : p.facets()) {
    RationalVector n{dot(f.normal, wq), f.offset};
    Rational rhs = dot(f.normal, out.lambda1);
    if (n[0].is_zero() && n[1].is_zero()) {
      if (rhs.sign() < 0) throw DimensionError("reduced polytope is empty");
      continue;
    }
    LatticeVector prim = primitive_direction(n);
    Rational scale = Rational(prim[0] != 0 ? prim[0] : prim[1]) / (n[0].is_zero() ? n[1] : n[0]);
    facets.push_back({prim, rhs * scale});
  }
  facets.push_back({LatticeVector{0, -1}, Rational(1)});
  out.reduced = Polytope(2, std::move(facets));
  return out;
}

}  // namespace lch
