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

#include <algorithm>
#include <functional>
#include <set>

#include "lch/building.hpp"

namespace lch {

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

std::string unlabeled_tree_code(std::size_t n, const EdgeList& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::function<std::string(std::size_t, std::size_t)> code = [&](std::size_t v, std::size_t p) {
    std::vector<std::string> kids;
    for (auto w : adj[v]) {
      if (w != p) kids.push_back(code(w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (std::size_t r = 0; r < n; ++r) {
    std::string c = code(r, n);
    if (r == 0 || c < best) best = c;
  }
  return best;
}

/// One representative edge list per unlabeled tree on n vertices.
std::vector<EdgeList> tree_shapes(std::size_t n) {
  if (n == 1) return {EdgeList{}};
  if (n == 2) return {EdgeList{{0, 1}}};
  std::vector<EdgeList> out;
  std::set<std::string> seen;
  std::vector<std::size_t> seq(n - 2, 0);
  for (;;) {
    std::vector<std::size_t> degree(n, 1);
    for (auto x : seq) ++degree[x];
    EdgeList edges;
    for (auto x : seq) {
      for (std::size_t leaf = 0; leaf < n; ++leaf) {
        if (degree[leaf] == 1) {
          edges.emplace_back(leaf, x);
          --degree[leaf];
          --degree[x];
          break;
        }
      }
    }
    std::vector<std::size_t> last;
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] == 1) last.push_back(v);
    }
    edges.emplace_back(last[0], last[1]);
    if (seen.insert(unlabeled_tree_code(n, edges)).second) out.push_back(edges);
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

enum class Relation { LSame, LUp, LDown, ChordUp, ChordDown, DSame };

void for_each_multiset(std::size_t items, std::size_t max_size,
                       const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    fn(cur);
    if (cur.size() == max_size) return;
    for (std::size_t i = from; i < items; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<BuildingType> enumerate_types(const EnumerationLimits& limits) {
  std::map<std::string, BuildingType> found;
  const EdgeClass leaf_classes[] = {EdgeClass::L, EdgeClass::WhiteMinus, EdgeClass::WhitePlus,
                                    EdgeClass::D};
  for (std::size_t n = 1; n <= limits.max_vertices; ++n) {
    if (n - 1 > limits.max_edges) break;
    const std::size_t leaf_budget = limits.max_edges - (n - 1);
    for (const auto& shape : tree_shapes(n)) {
      const std::size_t sphere_masks = limits.include_spheres ? (1UL << n) : 1;
      for (std::size_t mask = 0; mask < sphere_masks; ++mask) {
        auto is_sphere = [&](std::size_t v) { return (mask >> v) & 1UL; };
        std::vector<std::vector<Relation>> options;
        for (const auto& [a, b] : shape) {
          if (is_sphere(a) || is_sphere(b)) {
            options.push_back({Relation::DSame});
          } else if (limits.two_levels) {
            options.push_back({Relation::LSame, Relation::LUp, Relation::LDown, Relation::ChordUp,
                               Relation::ChordDown});
          } else {
            options.push_back({Relation::LSame});
          }
        }
        std::vector<std::size_t> choice(shape.size(), 0);
        for (;;) {
          // Levels from the relations, rooted at vertex 0.
          std::vector<long> rel_level(n, 0);
          std::vector<bool> placed(n, false);
          placed[0] = true;
          for (bool progress = true; progress;) {
            progress = false;
            for (std::size_t k = 0; k < shape.size(); ++k) {
              auto [a, b] = shape[k];
              Relation r = options[k][choice[k]];
              long delta = (r == Relation::LUp || r == Relation::ChordUp)     ? 1
                           : (r == Relation::LDown || r == Relation::ChordDown) ? -1
                                                                                : 0;
              if (placed[a] && !placed[b]) {
                rel_level[b] = rel_level[a] + delta;
                placed[b] = progress = true;
              } else if (placed[b] && !placed[a]) {
                rel_level[a] = rel_level[b] - delta;
                placed[a] = progress = true;
              }
            }
          }
          long lo = *std::min_element(rel_level.begin(), rel_level.end());
          long hi = *std::max_element(rel_level.begin(), rel_level.end());
          if (hi - lo <= 1) {
            std::vector<long> bases = hi == lo ? std::vector<long>{0} : std::vector<long>{0, -1};
            for (long base : bases) {
              const bool positive_pair = base == 0;
              // Length choices per edge.
              std::vector<std::vector<EdgeLength>> lengths;
              bool has_chord = false;
              for (std::size_t k = 0; k < shape.size(); ++k) {
                Relation r = options[k][choice[k]];
                long level = rel_level[shape[k].first] - lo + base;
                if (r == Relation::LSame) {
                  if (level == 0) {
                    lengths.push_back({EdgeLength::Finite, EdgeLength::Zero, EdgeLength::Broken});
                  } else {
                    lengths.push_back({EdgeLength::Finite, EdgeLength::Zero});
                  }
                } else if (r == Relation::LUp || r == Relation::LDown) {
                  lengths.push_back({EdgeLength::Broken});
                } else if (r == Relation::DSame) {
                  lengths.push_back({EdgeLength::Finite});
                } else {
                  has_chord = true;
                  lengths.push_back({EdgeLength::Finite});
                }
              }
              std::vector<EdgeLength> chord_lengths =
                  has_chord ? std::vector<EdgeLength>{EdgeLength::Finite, EdgeLength::Zero, EdgeLength::Broken}
                            : std::vector<EdgeLength>{EdgeLength::Finite};
              for (EdgeLength chord_len : chord_lengths) {
                std::vector<std::size_t> lc(shape.size(), 0);
                for (;;) {
                  BuildingType base_type;
                  for (std::size_t v = 0; v < n; ++v) {
                    base_type.vertices.push_back(
                        {"v" + std::to_string(v), is_sphere(v) ? VertexKind::Sphere : VertexKind::Disk,
                         rel_level[v] - lo + base});
                  }
                  for (std::size_t k = 0; k < shape.size(); ++k) {
                    auto [a, b] = shape[k];
                    Relation r = options[k][choice[k]];
                    TypeEdge e;
                    e.id = "e" + std::to_string(k);
                    std::size_t from = a, to = b;
                    if (r == Relation::ChordDown || r == Relation::LDown) std::swap(from, to);
                    e.ends = {"v" + std::to_string(from), "v" + std::to_string(to)};
                    if (r == Relation::ChordUp || r == Relation::ChordDown) {
                      e.cls = positive_pair ? EdgeClass::WhitePlus : EdgeClass::WhiteMinus;
                      e.length = chord_len;
                    } else if (r == Relation::DSame) {
                      e.cls = EdgeClass::D;
                    } else {
                      e.cls = EdgeClass::L;
                      e.length = lengths[k][lc[k]];
                      if (e.length == EdgeLength::Broken) {
                        e.break_at = r == Relation::LSame ? "crit" : "black";
                      }
                    }
                    base_type.edges.push_back(std::move(e));
                  }
                  const std::size_t items = n * 4;
                  for_each_multiset(items, leaf_budget, [&](const std::vector<std::size_t>& leaves) {
                    BuildingType t = base_type;
                    std::size_t k = 0;
                    for (auto item : leaves) {
                      std::size_t v = item / 4;
                      EdgeClass c = leaf_classes[item % 4];
                      if (is_sphere(v) && c != EdgeClass::D) return;
                      TypeEdge e;
                      e.id = "l" + std::to_string(k++);
                      e.ends = {"v" + std::to_string(v)};
                      e.cls = c;
                      t.edges.push_back(std::move(e));
                    }
                    try {
                      if (!is_stable(t).stable) return;
                    } catch (const TypeError&) {
                      return;
                    }
                    std::string key = canonical_form(t);
                    found.emplace(std::move(key), std::move(t));
                  });
                  std::size_t i = 0;
                  while (i < lc.size() && ++lc[i] == lengths[i].size()) lc[i++] = 0;
                  if (i == lc.size()) break;
                }
              }
            }
          }
          std::size_t i = 0;
          while (i < choice.size() && ++choice[i] == options[i].size()) choice[i++] = 0;
          if (i == choice.size()) break;
        }
      }
    }
  }
  std::vector<BuildingType> out;
  out.reserve(found.size());
  for (auto& [k, t] : found) out.push_back(std::move(t));
  return out;
}

}  // namespace lch
