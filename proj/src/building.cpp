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

#include "lch/building.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace lch {

namespace {

std::map<std::string, std::size_t> vertex_index(const BuildingType& t) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < t.vertices.size(); ++i) out[t.vertices[i].id] = i;
  return out;
}

bool is_boundary_at(const TypeEdge& e, const TypeVertex& v) {
  return v.kind == VertexKind::Disk && e.cls != EdgeClass::D;
}

struct Counts {
  long boundary = 0;
  long interior = 0;
  long chords = 0;
  long total() const { return boundary + interior; }
};

std::vector<Counts> special_counts(const BuildingType& t) {
  auto idx = vertex_index(t);
  std::vector<Counts> out(t.vertices.size());
  for (const auto& e : t.edges) {
    for (const auto& end : e.ends) {
      std::size_t i = idx.at(end);
      if (is_boundary_at(e, t.vertices[i])) {
        ++out[i].boundary;
      } else {
        ++out[i].interior;
      }
      if (e.is_chord()) ++out[i].chords;
    }
  }
  return out;
}

bool domain_stable(const TypeVertex& v, const Counts& c) {
  if (v.kind == VertexKind::Sphere) return c.total() >= 3;
  return c.boundary + 2 * c.interior >= 3;
}

bool is_neck_level(const BuildingType& t, long level) {
  return t.target == Target::Symplectization || level != 0;
}

const Decoration& decoration_of(const BuildingType& t, const std::string& id) {
  if (!t.decorations) throw TypeError("type carries no decorations");
  auto it = t.decorations->find(id);
  if (it == t.decorations->end()) throw TypeError("vertex " + id + " has no decoration");
  return it->second;
}

bool trivial_candidate(const BuildingType& t, const TypeVertex& v, const Counts& c) {
  return c.total() == 2 && c.chords == 2 && decoration_of(t, v.id).area.is_zero();
}

/// +1 outgoing, -1 incoming for chord edge e seen from its end number pos.
int direction(const TypeEdge& e, std::size_t pos) {
  if (e.is_leaf()) return e.cls == EdgeClass::WhitePlus ? 1 : -1;
  return pos == 0 ? 1 : -1;
}

std::set<std::string> selection_set(const BuildingType& t, const std::vector<std::string>& sel) {
  std::set<std::string> out;
  if (sel.empty()) {
    for (const auto& v : t.vertices) out.insert(v.id);
    return out;
  }
  for (const auto& id : sel) {
    t.vertex(id);
    out.insert(id);
  }
  return out;
}

struct PunctureSums {
  Rational in_sum;
  Rational out_sum;
  long in_count = 0;
  long out_count = 0;
};

PunctureSums puncture_sums(const BuildingType& t, const std::set<std::string>& sel) {
  PunctureSums s;
  for (const auto& e : t.edges) {
    if (!e.is_chord()) continue;
    bool internal = !e.is_leaf() && sel.count(e.ends[0]) && sel.count(e.ends[1]);
    if (internal) continue;
    for (std::size_t p = 0; p < e.ends.size(); ++p) {
      if (!sel.count(e.ends[p])) continue;
      if (!e.action) throw TypeError("puncture on edge " + e.id + " carries no action");
      if (direction(e, p) > 0) {
        s.out_sum += *e.action;
        ++s.out_count;
      } else {
        s.in_sum += *e.action;
        ++s.in_count;
      }
    }
  }
  return s;
}

std::string rational_or_dash(const std::optional<Rational>& r) { return r ? r->str() : "-"; }

}  // namespace

const TypeVertex& BuildingType::vertex(const std::string& id) const {
  for (const auto& v : vertices) {
    if (v.id == id) return v;
  }
  throw TypeError("unknown vertex " + id);
}

const TypeEdge& BuildingType::edge(const std::string& id) const {
  for (const auto& e : edges) {
    if (e.id == id) return e;
  }
  throw TypeError("unknown edge " + id);
}

const char* to_string(VertexKind k) { return k == VertexKind::Disk ? "disk" : "sphere"; }

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::L: return "L";
    case EdgeClass::WhiteMinus: return "white-";
    case EdgeClass::WhitePlus: return "white+";
    case EdgeClass::D: return "D";
  }
  return "?";
}

const char* to_string(EdgeLength l) {
  switch (l) {
    case EdgeLength::Finite: return "finite";
    case EdgeLength::Zero: return "zero";
    case EdgeLength::Broken: return "broken";
  }
  return "?";
}

const char* to_string(Target t) {
  return t == Target::Cobordism ? "cobordism" : "symplectization";
}

const char* to_string(StratumKind k) {
  switch (k) {
    case StratumKind::TwoLevel: return "two-level";
    case StratumKind::BrokenTrajectory: return "broken-trajectory";
    case StratumKind::Fake: return "fake";
  }
  return "?";
}

VertexKind parse_vertex_kind(const std::string& s) {
  if (s == "disk") return VertexKind::Disk;
  if (s == "sphere") return VertexKind::Sphere;
  throw TypeError("unknown vertex kind '" + s + "'");
}

EdgeClass parse_edge_class(const std::string& s) {
  if (s == "L") return EdgeClass::L;
  if (s == "white-") return EdgeClass::WhiteMinus;
  if (s == "white+") return EdgeClass::WhitePlus;
  if (s == "D") return EdgeClass::D;
  throw TypeError("unknown edge class '" + s + "'");
}

EdgeLength parse_edge_length(const std::string& s) {
  if (s == "finite") return EdgeLength::Finite;
  if (s == "zero") return EdgeLength::Zero;
  if (s == "broken") return EdgeLength::Broken;
  throw TypeError("unknown edge length '" + s + "'");
}

Target parse_target(const std::string& s) {
  if (s == "cobordism") return Target::Cobordism;
  if (s == "symplectization") return Target::Symplectization;
  throw TypeError("unknown target '" + s + "'");
}

void validate(const BuildingType& t) {
  if (t.vertices.empty()) throw TypeError("a building type needs at least one vertex");
  auto idx = vertex_index(t);
  if (idx.size() != t.vertices.size()) throw TypeError("duplicate vertex id");
  std::set<std::string> edge_ids;
  for (const auto& e : t.edges) {
    if (!edge_ids.insert(e.id).second) throw TypeError("duplicate edge id " + e.id);
  }

  std::vector<std::size_t> parent(t.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::map<std::pair<long, long>, std::vector<const TypeEdge*>> chord_pairs;
  for (const auto& e : t.edges) {
    if (e.ends.size() != 1 && e.ends.size() != 2) {
      throw TypeError("edge " + e.id + " must have one or two ends");
    }
    for (const auto& end : e.ends) {
      if (!idx.count(end)) throw TypeError("edge " + e.id + " references unknown vertex " + end);
    }
    if (e.action && e.action->sign() <= 0) throw TypeError("edge " + e.id + " has nonpositive action");
    if (e.action && !e.is_chord()) throw TypeError("only chord edges carry actions");
    if (e.lambda && (!e.is_chord() || e.is_leaf() || e.length != EdgeLength::Finite)) {
      throw TypeError("lambda is only meaningful on finite chord edges between levels");
    }
    if (e.lambda && e.lambda->sign() <= 0) throw TypeError("edge " + e.id + " has nonpositive lambda");
    if (e.break_at && (e.length != EdgeLength::Broken || e.cls != EdgeClass::L)) {
      throw TypeError("break point given on edge " + e.id + " which is not a broken L edge");
    }
    if (e.break_at && *e.break_at != "crit" && *e.break_at != "black") {
      throw TypeError("unknown break point '" + *e.break_at + "'");
    }
    for (const auto& end : e.ends) {
      const TypeVertex& v = t.vertices[idx.at(end)];
      if ((e.cls == EdgeClass::L || e.is_chord()) && v.kind != VertexKind::Disk &&
          !(e.is_chord() && e.is_leaf())) {
        throw TypeError("edge " + e.id + " must attach to disks");
      }
      if (e.cls == EdgeClass::L && v.kind != VertexKind::Disk) {
        throw TypeError("L edge " + e.id + " attached to a sphere");
      }
    }
    if (e.is_leaf()) {
      if (e.length != EdgeLength::Finite) throw TypeError("leaf " + e.id + " must have finite length");
      long lv = t.vertices[idx.at(e.ends[0])].level;
      if (t.target == Target::Cobordism) {
        if (e.cls == EdgeClass::WhiteMinus && lv > 0) {
          throw TypeError("incoming leaf " + e.id + " above the cobordism level");
        }
        if (e.cls == EdgeClass::WhitePlus && lv < 0) {
          throw TypeError("outgoing leaf " + e.id + " below the cobordism level");
        }
      }
      continue;
    }
    std::size_t a = idx.at(e.ends[0]), b = idx.at(e.ends[1]);
    if (a == b) throw TypeError("edge " + e.id + " is a loop");
    std::size_t ra = find(a), rb = find(b);
    if (ra == rb) throw TypeError("type graph has a cycle through edge " + e.id);
    parent[ra] = rb;
    long la = t.vertices[a].level, lb = t.vertices[b].level;
    if (std::abs(la - lb) > 1) throw TypeError("edge " + e.id + " skips a level");
    if (e.is_chord()) {
      if (lb != la + 1) throw TypeError("chord edge " + e.id + " must run from level j to j+1");
      if (t.target == Target::Cobordism) {
        if (e.cls == EdgeClass::WhiteMinus && lb > 0) {
          throw TypeError("white- edge " + e.id + " outside the negative end");
        }
        if (e.cls == EdgeClass::WhitePlus && la < 0) {
          throw TypeError("white+ edge " + e.id + " outside the positive end");
        }
      }
      chord_pairs[{la, lb}].push_back(&e);
    } else if (la != lb) {
      if (e.cls != EdgeClass::L || e.length != EdgeLength::Broken) {
        throw TypeError("edge " + e.id + " joins levels without being a broken L edge");
      }
    }
  }
  for (const auto& [pair, edges] : chord_pairs) {
    for (const auto* e : edges) {
      if (e->length != edges.front()->length || e->lambda != edges.front()->lambda) {
        throw TypeError("chord edges between levels " + std::to_string(pair.first) + " and " +
                        std::to_string(pair.second) + " do not share a length");
      }
    }
  }
  std::set<long> levels;
  for (const auto& v : t.vertices) levels.insert(v.level);
  if (*levels.rbegin() - *levels.begin() + 1 != static_cast<long>(levels.size())) {
    throw TypeError("levels are not contiguous");
  }
  if (t.decorations) {
    for (const auto& [id, d] : *t.decorations) {
      if (!idx.count(id)) throw TypeError("decoration for unknown vertex " + id);
    }
    for (const auto& v : t.vertices) {
      if (!t.decorations->count(v.id)) throw TypeError("vertex " + v.id + " has no decoration");
    }
  }
}

StabilityResult is_stable(const BuildingType& t) {
  validate(t);
  auto counts = special_counts(t);
  const bool decorated = t.decorations.has_value();
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    const auto& v = t.vertices[i];
    if (domain_stable(v, counts[i])) continue;
    if (decorated) {
      if (!decoration_of(t, v.id).area.is_zero()) continue;
      if (is_neck_level(t, v.level) && trivial_candidate(t, v, counts[i])) continue;
      return {false, v.id, "constant component with too few special points"};
    }
    return {false, v.id, "too few special points"};
  }
  if (decorated) {
    std::map<long, bool> has_nontrivial;
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
      const auto& v = t.vertices[i];
      if (!is_neck_level(t, v.level)) continue;
      bool nontrivial = !trivial_candidate(t, v, counts[i]);
      has_nontrivial[v.level] = has_nontrivial[v.level] || nontrivial;
    }
    for (const auto& [level, ok] : has_nontrivial) {
      if (!ok) {
        for (const auto& v : t.vertices) {
          if (v.level == level) return {false, v.id, "level consists of trivial cylinders"};
        }
      }
    }
  }
  return {};
}

long domain_dim(const BuildingType& t) {
  StabilityResult s = is_stable(t);
  if (!s.stable) throw TypeError("unstable type at vertex " + s.witness + ": " + s.reason);
  auto counts = special_counts(t);
  long dim = 0;
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    if (t.vertices[i].kind == VertexKind::Disk) {
      dim += counts[i].boundary - 3 + 2 * counts[i].interior;
    } else {
      dim += 2 * counts[i].total() - 6;
    }
  }
  std::set<std::pair<long, long>> finite_pairs;
  auto idx = vertex_index(t);
  for (const auto& e : t.edges) {
    if (e.is_leaf() || e.length != EdgeLength::Finite) continue;
    if (e.cls == EdgeClass::L) ++dim;
    if (e.is_chord()) {
      long la = t.vertices[idx.at(e.ends[0])].level;
      finite_pairs.insert({la, la + 1});
    }
  }
  return dim + static_cast<long>(finite_pairs.size());
}

long total_dim(const BuildingType& t) {
  long dim = domain_dim(t);
  if (t.decorations) {
    for (const auto& [id, d] : *t.decorations) dim += d.index;
  }
  return dim;
}

SphereStratumDim sphere_stratum_dim(const Rational& chern, const Rational& m, long e_black,
                                    long ambient_dim) {
  SphereStratumDim out;
  out.single_puncture = Rational(2) * chern - Rational(2) - Rational(2) * m;
  out.cobordism_level = Rational(ambient_dim) + Rational(2) * chern + Rational(2 * e_black) -
                        Rational(2) * (m - Rational(1)) - Rational(6);
  out.log_pairing = chern - m;
  return out;
}

std::vector<std::string> level_selection(const BuildingType& t, long level) {
  std::vector<std::string> out;
  for (const auto& v : t.vertices) {
    if (v.level == level) out.push_back(v.id);
  }
  return out;
}

ActionBalance action_balance(const BuildingType& t, const std::vector<std::string>& selection) {
  auto sel = selection_set(t, selection);
  PunctureSums s = puncture_sums(t, sel);
  ActionBalance out;
  out.in_sum = s.in_sum;
  out.out_sum = s.out_sum;
  for (const auto& id : sel) out.area += decoration_of(t, id).area;
  out.defect = out.out_sum - out.in_sum + out.area;
  out.consistent = out.defect.is_zero() && out.area.sign() >= 0 && out.out_sum <= out.in_sum;
  out.corollary_violation =
      (out.area.sign() > 0 && s.in_count == 0) || out.out_sum > out.in_sum;
  return out;
}

IntersectionMultiplicity intersection_multiplicity(const BuildingType& t, End end,
                                                   const std::vector<std::string>& selection) {
  auto sel = selection_set(t, selection);
  PunctureSums s = puncture_sums(t, sel);
  IntersectionMultiplicity out;
  out.value = end == End::Minus ? s.in_sum : s.out_sum;
  if (t.decorations) {
    Rational sum;
    for (const auto& id : sel) {
      const auto& d = decoration_of(t, id);
      sum += end == End::Minus ? d.y_minus : d.y_plus;
    }
    out.decorated = sum;
    out.matches = sum == out.value;
  }
  return out;
}

std::string canonical_form(const BuildingType& t) {
  auto idx = vertex_index(t);
  std::vector<std::vector<std::size_t>> incident(t.vertices.size());
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    for (const auto& end : t.edges[i].ends) incident[idx.at(end)].push_back(i);
  }
  auto vertex_label = [&](std::size_t v) {
    const auto& x = t.vertices[v];
    std::string s = std::string(to_string(x.kind)) + "@" + std::to_string(x.level);
    if (t.decorations) {
      const auto& d = t.decorations->at(x.id);
      s += "{" + d.area.str() + "," + d.chern.str() + "," + d.y_minus.str() + "," +
           d.y_plus.str() + "," + rational_or_dash(d.maslov) + "," + std::to_string(d.index) + "}";
    }
    return s;
  };
  auto edge_label = [&](const TypeEdge& e, std::size_t v) {
    std::string s = std::string(to_string(e.cls)) + ":" + to_string(e.length);
    if (!e.is_leaf()) s += idx.at(e.ends[0]) == v ? ">" : "<";
    s += ":" + e.label.value_or("") + ":" + rational_or_dash(e.action) + ":" +
         rational_or_dash(e.lambda) + ":" + e.break_at.value_or("");
    return s;
  };
  std::function<std::string(std::size_t, long)> encode = [&](std::size_t v, long via) {
    std::vector<std::pair<std::size_t, std::string>> boundary;
    std::vector<std::string> interior;
    for (std::size_t ei : incident[v]) {
      const auto& e = t.edges[ei];
      std::string item;
      if (static_cast<long>(ei) != via) {
        item = edge_label(e, v);
        if (!e.is_leaf()) {
          std::size_t other = idx.at(e.ends[0]) == v ? idx.at(e.ends[1]) : idx.at(e.ends[0]);
          item += "(" + encode(other, static_cast<long>(ei)) + ")";
        }
      }
      if (is_boundary_at(e, t.vertices[v])) {
        boundary.emplace_back(ei, item);
      } else if (static_cast<long>(ei) != via) {
        interior.push_back(item);
      }
    }
    std::string bseq;
    auto joined = [&](std::size_t start) {
      std::string s;
      for (std::size_t k = 0; k < boundary.size(); ++k) {
        const auto& [ei, item] = boundary[(start + k) % boundary.size()];
        if (static_cast<long>(ei) == via) continue;
        s += item + ";";
      }
      return s;
    };
    long via_pos = -1;
    for (std::size_t k = 0; k < boundary.size(); ++k) {
      if (static_cast<long>(boundary[k].first) == via) via_pos = static_cast<long>(k);
    }
    if (via_pos >= 0) {
      bseq = joined(static_cast<std::size_t>(via_pos));
    } else if (!boundary.empty()) {
      bseq = joined(0);
      for (std::size_t k = 1; k < boundary.size(); ++k) bseq = std::min(bseq, joined(k));
    }
    std::sort(interior.begin(), interior.end());
    std::string iseq;
    for (const auto& s : interior) iseq += s + ";";
    return "[" + vertex_label(v) + "|" + bseq + "|" + iseq + "]";
  };
  // Components of the forest, each encoded from its best root.
  std::vector<long> comp(t.vertices.size(), -1);
  long ncomp = 0;
  for (std::size_t s = 0; s < t.vertices.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t ei : incident[v]) {
        for (const auto& end : t.edges[ei].ends) {
          std::size_t w = idx.at(end);
          if (comp[w] < 0) {
            comp[w] = ncomp;
            stack.push_back(w);
          }
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::string> parts(static_cast<std::size_t>(ncomp));
  std::vector<bool> seeded(static_cast<std::size_t>(ncomp), false);
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    std::string e = encode(v, -1);
    auto c = static_cast<std::size_t>(comp[v]);
    if (!seeded[c] || e < parts[c]) parts[c] = e;
    seeded[c] = true;
  }
  std::sort(parts.begin(), parts.end());
  std::string out = std::string(to_string(t.target)) + "#";
  for (const auto& p : parts) out += p + "+";
  return out;
}

namespace {

Decoration add_decorations(const Decoration& a, const Decoration& b) {
  Decoration d;
  d.area = a.area + b.area;
  d.chern = a.chern + b.chern;
  d.y_minus = a.y_minus + b.y_minus;
  d.y_plus = a.y_plus + b.y_plus;
  if (a.maslov && b.maslov) d.maslov = *a.maslov + *b.maslov;
  d.index = a.index + b.index;
  return d;
}

/// Remove edge e and identify its endpoints; the merged vertex keeps the
/// first endpoint's id and is placed at the given level.
BuildingType merge_along(const BuildingType& t, const TypeEdge& e, long level) {
  BuildingType out = t;
  const std::string keep = e.ends[0];
  const std::string gone = e.ends[1];
  out.edges.erase(std::remove_if(out.edges.begin(), out.edges.end(),
                                 [&](const TypeEdge& x) { return x.id == e.id; }),
                  out.edges.end());
  for (auto& x : out.edges) {
    for (auto& end : x.ends) {
      if (end == gone) end = keep;
    }
  }
  VertexKind kind = t.vertex(keep).kind;
  out.vertices.erase(std::remove_if(out.vertices.begin(), out.vertices.end(),
                                    [&](const TypeVertex& v) { return v.id == gone; }),
                     out.vertices.end());
  for (auto& v : out.vertices) {
    if (v.id == keep) {
      v.level = level;
      v.kind = kind;
    }
  }
  if (out.decorations) {
    Decoration merged = add_decorations(out.decorations->at(keep), out.decorations->at(gone));
    out.decorations->erase(gone);
    (*out.decorations)[keep] = merged;
  }
  return out;
}

bool labels_complete(const BuildingType& t) {
  return std::all_of(t.edges.begin(), t.edges.end(),
                     [](const TypeEdge& e) { return !e.is_chord() || e.action.has_value(); });
}

/// Admissible as an emitted stratum: well formed, stable, and action
/// balanced on every neck-level vertex when decorations allow the check.
bool admissible(const BuildingType& t) {
  try {
    if (!is_stable(t).stable) return false;
  } catch (const TypeError&) {
    return false;
  }
  if (t.decorations && labels_complete(t)) {
    for (const auto& v : t.vertices) {
      if (!is_neck_level(t, v.level)) continue;
      if (!action_balance(t, {v.id}).consistent) return false;
    }
  }
  return true;
}

std::set<std::string> component_after_removal(const BuildingType& t, const std::string& edge_id,
                                              const std::string& start) {
  std::set<std::string> seen{start};
  std::vector<std::string> stack{start};
  while (!stack.empty()) {
    std::string v = stack.back();
    stack.pop_back();
    for (const auto& e : t.edges) {
      if (e.id == edge_id || e.is_leaf()) continue;
      for (std::size_t p = 0; p < 2; ++p) {
        if (e.ends[p] == v && seen.insert(e.ends[1 - p]).second) stack.push_back(e.ends[1 - p]);
      }
    }
  }
  return seen;
}

}  // namespace

BuildingType collapse_edge(const BuildingType& t, const std::string& edge_id) {
  const TypeEdge& e = t.edge(edge_id);
  if (e.is_leaf() || e.cls != EdgeClass::L) throw TypeError("only internal L edges collapse");
  if (t.vertex(e.ends[0]).level != t.vertex(e.ends[1]).level) {
    throw TypeError("cannot collapse an edge joining two levels");
  }
  return merge_along(t, e, t.vertex(e.ends[0]).level);
}

namespace {

/// Glue the two levels joined by the single chord edge e.
BuildingType merge_levels(const BuildingType& t, const TypeEdge& e) {
  long lo = t.vertex(e.ends[0]).level;
  long hi = lo + 1;
  bool toward_zero_from_below = t.target == Target::Cobordism && hi <= 0;
  long merged_level = toward_zero_from_below ? hi : lo;
  BuildingType out = merge_along(t, e, merged_level);
  for (auto& v : out.vertices) {
    if (v.id == e.ends[0]) continue;
    if (toward_zero_from_below) {
      if (v.level <= lo) v.level += 1;
    } else if (v.level >= hi) {
      v.level -= 1;
    }
  }
  return out;
}

BoundaryStratum make_stratum(StratumKind kind, BuildingType type, std::string description) {
  BoundaryStratum s;
  s.kind = kind;
  s.type = std::move(type);
  s.description = std::move(description);
  return s;
}

void sort_unique(std::vector<BoundaryStratum>& v) {
  std::vector<std::pair<std::string, BoundaryStratum>> keyed;
  for (auto& s : v) keyed.emplace_back(std::string(to_string(s.kind)) + canonical_form(s.type), std::move(s));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  v.clear();
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
    v.push_back(std::move(keyed[i].second));
  }
}

}  // namespace

BoundaryStrata boundary_strata(const BuildingType& t) {
  if (total_dim(t) != 1) throw TypeError("boundary strata need a one-dimensional type");
  BoundaryStrata out;
  std::set<long> levels;
  for (const auto& v : t.vertices) levels.insert(v.level);
  const bool single_level = levels.size() == 1;

  for (const auto& e : t.edges) {
    if (e.is_leaf() || e.cls != EdgeClass::L || e.length != EdgeLength::Finite) continue;
    const long level = t.vertex(e.ends[0]).level;

    BuildingType zero = t;
    for (auto& x : zero.edges) {
      if (x.id == e.id) x.length = EdgeLength::Zero;
    }
    if (admissible(zero)) {
      BoundaryStratum s = make_stratum(StratumKind::Fake, zero, "edge " + e.id + " has length zero");
      s.adjacent.push_back(t);
      s.adjacent.push_back(collapse_edge(t, e.id));
      out.fake_strata.push_back(std::move(s));
    }

    if (t.target == Target::Cobordism && level == 0) {
      BuildingType crit = t;
      for (auto& x : crit.edges) {
        if (x.id == e.id) {
          x.length = EdgeLength::Broken;
          x.break_at = "crit";
        }
      }
      if (admissible(crit)) {
        out.true_strata.push_back(make_stratum(StratumKind::BrokenTrajectory, crit,
                                               "edge " + e.id + " broken at a critical point of f_L"));
      }
    }

    if (single_level) {
      auto from_side = component_after_removal(t, e.id, e.ends[0]);
      auto to_side = component_after_removal(t, e.id, e.ends[1]);
      std::vector<std::pair<const std::set<std::string>*, long>> moves;
      if (t.target == Target::Cobordism) {
        moves = {{&to_side, 1}, {&from_side, -1}};
      } else {
        moves = {{&to_side, 1}};
      }
      for (const auto& [side, shift] : moves) {
        BuildingType split = t;
        for (auto& v : split.vertices) {
          if (side->count(v.id)) v.level += shift;
        }
        for (auto& x : split.edges) {
          if (x.id == e.id) {
            x.length = EdgeLength::Broken;
            x.break_at = "black";
          }
        }
        if (admissible(split)) {
          out.true_strata.push_back(make_stratum(
              StratumKind::TwoLevel, split,
              "edge " + e.id + " broken at a black generator, " +
                  (shift > 0 ? std::string("downstream part raised") : std::string("upstream part lowered"))));
        }
      }
    }
  }

  std::map<long, std::vector<const TypeEdge*>> pairs;
  for (const auto& e : t.edges) {
    if (e.is_leaf() || !e.is_chord() || e.length != EdgeLength::Finite) continue;
    pairs[t.vertex(e.ends[0]).level].push_back(&e);
  }
  for (const auto& [lo, edges] : pairs) {
    const std::string where = std::to_string(lo) + "/" + std::to_string(lo + 1);
    BuildingType broken = t;
    for (auto& x : broken.edges) {
      if (x.is_chord() && !x.is_leaf() && broken.vertex(x.ends[0]).level == lo) {
        x.length = EdgeLength::Broken;
        x.lambda.reset();
      }
    }
    if (admissible(broken)) {
      out.true_strata.push_back(make_stratum(StratumKind::TwoLevel, broken,
                                             "chord edges between levels " + where + " broken"));
    }
    if (edges.size() == 1) {
      BuildingType zero = t;
      for (auto& x : zero.edges) {
        if (x.id == edges.front()->id) {
          x.length = EdgeLength::Zero;
          x.lambda.reset();
        }
      }
      if (admissible(zero)) {
        BoundaryStratum s = make_stratum(StratumKind::Fake, zero,
                                         "chord edge " + edges.front()->id + " has length zero");
        s.adjacent.push_back(t);
        s.adjacent.push_back(merge_levels(t, *edges.front()));
        out.fake_strata.push_back(std::move(s));
      }
    }
  }
  sort_unique(out.true_strata);
  sort_unique(out.fake_strata);
  return out;
}

void validate_sheets(const PerturbationSheets& p) {
  if (p.empty()) throw std::invalid_argument("perturbation needs at least one sheet");
  for (const auto& s : p) {
    if (s.weight.sign() <= 0) throw std::invalid_argument("sheet " + s.id + " has nonpositive weight");
  }
  if (total_weight(p) != Rational(1)) throw std::invalid_argument("sheet weights do not sum to 1");
}

Rational total_weight(const PerturbationSheets& p) {
  Rational s;
  for (const auto& x : p) s += x.weight;
  return s;
}

PerturbationSheets pullback_sheets(const PerturbationSheets& a, const PerturbationSheets& b) {
  validate_sheets(a);
  validate_sheets(b);
  PerturbationSheets out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back({x.weight * y.weight, "(" + x.id + "," + y.id + ")"});
  }
  return out;
}

PerturbationSheets merge_sheets(const PerturbationSheets& p) {
  validate_sheets(p);
  PerturbationSheets out;
  std::map<std::string, std::size_t> at;
  for (const auto& s : p) {
    auto it = at.find(s.id);
    if (it == at.end()) {
      at[s.id] = out.size();
      out.push_back(s);
    } else {
      out[it->second].weight += s.weight;
    }
  }
  return out;
}

ClassByComponent boundary_class(const BuildingType& t, const std::vector<ArcClass>& arcs,
                                const std::map<std::string, Capping>& cappings, long rank,
                                const std::vector<std::string>& selection) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  auto sel = selection_set(t, selection);
  ClassByComponent out;
  auto add = [&](const std::string& comp, const std::vector<Integer>& v, int sign) {
    if (static_cast<long>(v.size()) != rank) throw TypeError("class vector has wrong rank");
    auto& acc = out[comp];
    if (acc.empty()) acc.assign(static_cast<std::size_t>(rank), Integer(0));
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += sign * v[i];
  };
  for (const auto& a : arcs) {
    t.vertex(a.vertex);
    if (!sel.count(a.vertex)) continue;
    add(a.component, a.cls, a.reversed ? -1 : 1);
  }
  for (const auto& e : t.edges) {
    if (!e.is_chord()) continue;
    for (std::size_t p = 0; p < e.ends.size(); ++p) {
      if (!sel.count(e.ends[p])) continue;
      if (!e.label) throw TypeError("chord edge " + e.id + " has no label");
      auto it = cappings.find(*e.label);
      if (it == cappings.end()) throw TypeError("no capping path for chord " + *e.label);
      add(it->second.component, it->second.cls, direction(e, p));
    }
  }
  for (auto& [comp, v] : out) {
    if (v.empty()) v.assign(static_cast<std::size_t>(rank), Integer(0));
  }
  return out;
}

}  // namespace lch
