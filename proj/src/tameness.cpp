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

#include "lch/tameness.hpp"

#include <stdexcept>

namespace lch {

namespace {

struct Fit {
  bool consistent = true;
  std::optional<Rational> factor;
};

/// Single factor f with value_i = f * omega_i on every row.
Fit fit_factor(const std::vector<Rational>& omega, const std::vector<Rational>& value,
               std::vector<Rational>& residuals) {
  Fit fit;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!omega[i].is_zero()) {
      fit.factor = value[i] / omega[i];
      break;
    }
  }
  Rational f = fit.factor.value_or(Rational(0));
  residuals.clear();
  for (std::size_t i = 0; i < omega.size(); ++i) {
    residuals.push_back(value[i] - f * omega[i]);
    if (!residuals.back().is_zero()) fit.consistent = false;
  }
  return fit;
}

bool end_tame(const std::optional<EndData>& e) {
  if (!e) return true;
  return e->tau_y >= Rational(3) && e->tau_z >= Rational(1);
}

}  // namespace

const char* to_string(P3State s) {
  switch (s) {
    case P3State::Holds: return "holds";
    case P3State::Fails: return "fails";
    case P3State::Vacuous: return "vacuous";
  }
  return "?";
}

TamenessVerdict check_tame(const CobordismClassData& d) {
  TamenessVerdict v;
  v.p1 = d.integral_symplectic_class;
  for (const auto& c : d.classes) {
    if (!c.omega.is_integer()) v.p1 = false;
  }

  std::vector<Rational> omega, value, residuals;
  std::vector<const AbsoluteClass*> basis;
  for (const auto& c : d.classes) {
    if (!c.avoids_y_plus) continue;
    basis.push_back(&c);
    omega.push_back(c.omega);
    value.push_back(c.c1 - c.y_minus);
  }
  Fit f2 = fit_factor(omega, value, residuals);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    v.certificate.push_back({basis[i]->name, "absolute", omega[i], value[i], residuals[i]});
  }
  if (!f2.consistent) {
    v.p2 = false;
  } else if (!f2.factor) {
    v.p2 = true;
  } else {
    Rational lambda = *f2.factor - Rational(1);
    v.lambda_minus = lambda;
    v.p2 = lambda.sign() > 0;
  }

  if (!d.outgoing_end_nonempty) {
    v.p3 = P3State::Vacuous;
  } else {
    omega.clear();
    value.clear();
    for (const auto& r : d.relative) {
      omega.push_back(r.omega);
      value.push_back(r.y_plus);
    }
    Fit f3 = fit_factor(omega, value, residuals);
    for (std::size_t i = 0; i < d.relative.size(); ++i) {
      v.certificate.push_back({d.relative[i].name, "relative", omega[i], value[i], residuals[i]});
    }
    if (!f3.consistent) {
      v.p3 = P3State::Fails;
    } else {
      Rational lambda = f3.factor ? -*f3.factor : Rational(0);
      v.lambda_plus = lambda;
      v.p3 = lambda.sign() >= 0 ? P3State::Holds : P3State::Fails;
    }
  }

  v.ends_tame = end_tame(d.negative_end) && end_tame(d.positive_end);
  v.overall = v.p1 && v.p2 && v.p3 != P3State::Fails && v.ends_tame;
  return v;
}

namespace {

void check_n(long n) {
  if (n < 1) throw std::invalid_argument("dimension parameter n must be at least 1");
}

}  // namespace

CobordismClassData trivial_cobordism(long n) {
  check_n(n);
  CobordismClassData d;
  d.name = "trivial-cobordism@1";
  // Line in the exceptional divisor Y- of the blown-up projective space.
  d.classes.push_back({"exceptional-line", Rational(1), Rational(n - 1), Rational(-1), Rational(0), true});
  d.relative.push_back({"disk", Rational(1), Rational(-1)});
  d.outgoing_end_nonempty = true;
  d.negative_end = EndData{Rational(n), Rational(1)};
  d.positive_end = EndData{Rational(n), Rational(1)};
  return d;
}

CobordismClassData harvey_lawson(long n) {
  check_n(n);
  CobordismClassData d;
  d.name = "harvey-lawson@1";
  d.classes.push_back({"line", Rational(1), Rational(n + 1), Rational(1), Rational(0), true});
  d.outgoing_end_nonempty = false;
  d.negative_end = EndData{Rational(n), Rational(1)};
  return d;
}

CobordismClassData ball_blowup(long n) {
  check_n(n);
  CobordismClassData d;
  d.name = "ball-blowup@1";
  d.classes.push_back({"fiber", Rational(1), Rational(2), Rational(1), Rational(0), true});
  d.classes.push_back({"exceptional-line", Rational(1), Rational(n - 1), Rational(0), Rational(0), true});
  d.outgoing_end_nonempty = false;
  d.negative_end = EndData{Rational(n), Rational(1)};
  return d;
}

std::vector<std::string> builtin_cobordism_names() {
  return {"ball-blowup@1", "harvey-lawson@1", "trivial-cobordism@1"};
}

CobordismClassData builtin_cobordism(const std::string& name, long n) {
  std::string base = name;
  auto at = name.find('@');
  if (at != std::string::npos) {
    if (name.substr(at) != "@1") throw std::invalid_argument("unknown built-in version in '" + name + "'");
    base = name.substr(0, at);
  }
  if (base == "trivial-cobordism") return trivial_cobordism(n);
  if (base == "harvey-lawson") return harvey_lawson(n);
  if (base == "ball-blowup") return ball_blowup(n);
  throw std::invalid_argument("unknown built-in cobordism '" + name + "'");
}

CobordismClassData symplectization_truncation(const Rational& tau_y, const Rational& tau_z,
                                              const Rational& w1, const Rational& w2) {
  if (w1.sign() <= 0) throw std::invalid_argument("slice weights must be positive");
  if (w2 <= w1) throw std::invalid_argument("need w2 > w1");
  if (tau_z.sign() <= 0) throw std::invalid_argument("tau_Z must be positive");
  CobordismClassData d;
  d.name = "symplectization-truncation";
  const Rational s = tau_y + tau_z;
  // Base sphere in Y-: c1 of the complement of Y+ restricts to (tau_Y + tau_Z) omega.
  d.classes.push_back({"base-minus", w1, s * w1, Rational(0), Rational(0), true});
  // Base sphere in Y+, normal degree -tau_Z.
  d.classes.push_back({"base-plus", w2, (tau_y - tau_z) * w2, Rational(0), -tau_z * w2, false});
  d.classes.push_back({"fiber", w2 - w1, Rational(2), Rational(1), Rational(1), false});
  d.relative.push_back({"base-plus", w2, -tau_z * w2});
  d.outgoing_end_nonempty = true;
  d.negative_end = EndData{tau_y, tau_z};
  d.positive_end = EndData{tau_y, tau_z};
  return d;
}

FilterResult no_cap_filter(const BuildingType& m, const CobordismClassData& d) {
  return no_cap_filter(m, check_tame(d));
}

FilterResult no_cap_filter(const BuildingType& m, const TamenessVerdict& v) {
  validate(m);
  if (!m.decorations) throw TypeError("no-cap filter needs decorations");
  for (const auto& vert : m.vertices) {
    if (!m.decorations->count(vert.id)) throw TypeError("vertex " + vert.id + " has no decoration");
  }
  const bool level_zero_x = m.target == Target::Cobordism;
  for (const auto& vert : m.vertices) {
    if (!level_zero_x || vert.level != 0) continue;
    long incoming = 0, outgoing = 0;
    for (const auto& e : m.edges) {
      if (!e.is_chord()) continue;
      for (std::size_t p = 0; p < e.ends.size(); ++p) {
        if (e.ends[p] != vert.id) continue;
        bool out = e.is_leaf() ? e.cls == EdgeClass::WhitePlus : p == 0;
        (out ? outgoing : incoming) += 1;
      }
    }
    const Decoration& dec = m.decorations->at(vert.id);
    if (vert.kind == VertexKind::Disk) {
      if (incoming == 0 && outgoing > 0 && v.p3 != P3State::Fails) {
        return {false, vert.id, "disk with outgoing but no incoming punctures"};
      }
      if (incoming == 0 && dec.area.sign() > 0 && v.p3 == P3State::Holds && v.lambda_plus &&
          v.lambda_plus->sign() > 0) {
        return {false, vert.id, "disk without incoming punctures would have nonpositive area"};
      }
    } else if (incoming + outgoing == 1) {
      bool rigid = false;
      try {
        rigid = total_dim(m) == 0;
      } catch (const TypeError&) {
        rigid = false;
      }
      if (incoming == 1 && v.p2 && rigid) {
        SphereStratumDim dim = sphere_stratum_dim(dec.chern, dec.y_minus, 0, 0);
        if (dim.single_puncture.sign() > 0) {
          return {false, vert.id, "single-puncture sphere cannot be rigid"};
        }
      }
      if (outgoing == 1 && v.p3 != P3State::Fails) {
        return {false, vert.id, "sphere with one outgoing puncture and no incoming"};
      }
    }
  }
  return {};
}

}  // namespace lch
