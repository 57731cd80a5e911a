// Copyright 2026 The Authors.
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

#include "wlp/wilson_matroid.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace wlp {
namespace {

void require_well_defined(const WilsonDiagram& w, const Limits& limits) {
  const DefinednessClass cls = classify_definedness(w, limits);
  if (!cls.well_defined()) {
    throw OverdefinedError(cls.witness, "diagram " + w.to_string() + " is overdefined");
  }
}

// Kuhn's augmenting paths from vertex v; owner[r] is the vertex matched to
// propagator r, or 0.
bool augment(const WilsonDiagram& w, int v, std::array<int, kMaxPropagators>& owner,
             PropSet& visited) {
  for (int r = 0; r < w.k(); ++r) {
    if (visited.contains(r) || !w.support(r).contains(v)) continue;
    visited = visited.with(r);
    if (owner[r] == 0 || augment(w, owner[r], owner, visited)) {
      owner[r] = v;
      return true;
    }
  }
  return false;
}

// Connected classes of `props` under the relation "linked(p, q)".
template <class Linked>
std::vector<PropSet> prop_classes(PropSet props, Linked linked) {
  std::vector<PropSet> out;
  PropSet left = props;
  while (!left.empty()) {
    PropSet block = PropSet::single(left.first());
    for (PropSet frontier = block; !frontier.empty();) {
      PropSet next;
      for (int p : frontier) {
        for (int q : left - block) {
          if (linked(p, q)) next = next.with(q);
        }
      }
      block |= next;
      frontier = next;
    }
    out.push_back(block);
    left -= block;
  }
  return out;
}

bool overlap_connected(const WilsonDiagram& w, PropSet props) {
  return prop_classes(props, [&w](int p, int q) {
           return w.support(p).intersects(w.support(q));
         }).size() <= 1;
}

// The component as a diagram of its own, on its vertices in induced order.
ContractedDiagram component_diagram(const WilsonDiagram& w, PropSet props) {
  return contract_diagram(w, w.all_props() - props);
}

PropSet lift_props(PropSet local, const ContractedDiagram& cd) {
  PropSet out;
  for (int r : local) out = out.with(cd.prop_labels[r]);
  return out;
}

VertexSet lift_vertices(VertexSet local, const ContractedDiagram& cd) {
  VertexSet out;
  for (int v : local) out = out.with(cd.vertex_labels[v - 1]);
  return out;
}

std::vector<PropSet> connected_flacets(const WilsonDiagram& w) {
  std::vector<PropSet> out;
  const PropSet all = w.all_props();
  for (std::uint32_t mask = 1; mask <= all.bits(); ++mask) {
    const PropSet p(mask);
    const VertexSet f = propagator_flat(w, p).flat;
    if (f.empty() || transversal_rank(w, f) != p.size()) continue;
    // Cyclic: no element of F(P) is a coloop of the restriction.
    bool cyclic = true;
    for (int v : f) {
      if (transversal_rank(w, f.without(v)) != p.size()) {
        cyclic = false;
        break;
      }
    }
    if (!cyclic) continue;
    bool flat = true;
    for (int v : w.vertices() - f) {
      if (transversal_rank(w, f.with(v)) == p.size()) {
        flat = false;
        break;
      }
    }
    if (!flat || !overlap_connected(w, all - p)) continue;
    const auto split = prop_classes(p, [&w, f](int a, int b) {
      return (w.support(a) & w.support(b)).intersects(f);
    });
    if (split.size() == 1) out.push_back(p);
  }
  return out;
}

bool components_cross(const WilsonDiagram& w, const std::vector<WilsonComponent>& parts) {
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      for (int p : parts[a].props) {
        for (int q : parts[b].props) {
          if (propagators_cross(w.prop(p), w.prop(q))) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

int transversal_rank(const WilsonDiagram& w, VertexSet vertices) {
  std::array<int, kMaxPropagators> owner{};
  int matched = 0;
  for (int v : vertices) {
    PropSet visited;
    if (augment(w, v, owner, visited)) ++matched;
  }
  return matched;
}

WilsonMatroid build_matroid(const WilsonDiagram& w, const Limits& limits) {
  require_well_defined(w, limits);
  limits.require(binomial(w.n(), w.k()), "basis enumeration");
  std::vector<VertexSet> bases;
  for_each_combination(w.n(), w.k(), [&](std::uint32_t mask) {
    const VertexSet b(mask);
    if (transversal_rank(w, b) == w.k()) bases.push_back(b);
  });
  return {w, Matroid::from_bases(w.n(), std::move(bases), limits)};
}

PropagatorFlat propagator_flat(const WilsonDiagram& w, PropSet props) {
  const VertexSet inside = dependency_set(w, props);
  const VertexSet outside = dependency_set(w, w.all_props() - props);
  if (props.empty()) return {props, w.vertices() - outside};
  return {props, inside - outside};
}

std::vector<WilsonComponent> wilson_components(const WilsonDiagram& w,
                                               const Limits& limits) {
  require_well_defined(w, limits);
  std::vector<WilsonComponent> out;
  for (int v : propagator_flat(w, PropSet{}).flat) {
    out.push_back({PropSet{}, VertexSet::single(v)});
  }
  const auto classes = prop_classes(w.all_props(), [&w](int p, int q) {
    return w.support(p).intersects(w.support(q));
  });
  for (PropSet c : classes) out.push_back({c, dependency_set(w, c)});
  std::sort(out.begin(), out.end(), [](const WilsonComponent& a, const WilsonComponent& b) {
    return a.vertices.first() < b.vertices.first();
  });
  return out;
}

bool wilson_is_connected(const WilsonDiagram& w, const Limits& limits) {
  return wilson_components(w, limits).size() <= 1;
}

std::vector<PropSet> propagator_flacets(const WilsonDiagram& w, const Limits& limits) {
  require_well_defined(w, limits);
  if (!wilson_is_connected(w, limits)) {
    throw Error(Errc::kDisconnectedDiagram, "diagram " + w.to_string() + " is disconnected");
  }
  return connected_flacets(w);
}

bool wilson_is_positroid(const WilsonDiagram& w, const Limits& limits) {
  const std::vector<WilsonComponent> parts = wilson_components(w, limits);
  if (parts.size() <= 1) {
    for (PropSet p : connected_flacets(w)) {
      if (!is_cyclic_interval(propagator_flat(w, p).flat, w.n())) return false;
    }
    return true;
  }
  if (components_cross(w, parts)) return false;
  for (const WilsonComponent& part : parts) {
    if (part.props.empty()) continue;
    if (!wilson_is_positroid(component_diagram(w, part.props).diagram, limits)) return false;
  }
  return true;
}

std::string_view route_name(Route route) {
  switch (route) {
    case Route::kNonCrossing: return "NonCrossing";
    case Route::kExactUntangled: return "ExactUntangled";
    case Route::kFlacetCriterion: return "FlacetCriterion";
    case Route::kNotPositroid: return "NotPositroid";
    case Route::kOverdefined: return "Overdefined";
  }
  return "Unknown";
}

AdmissibilityVerdict is_admissible(const WilsonDiagram& w, const Limits& limits) {
  AdmissibilityVerdict v;
  v.definedness = classify_definedness(w, limits);
  v.crossings = crossing_pairs(w);
  v.well_defined = v.definedness.well_defined();
  if (!v.well_defined) {
    v.route = Route::kOverdefined;
    return v;
  }
  v.components = wilson_components(w, limits);
  v.connected = v.components.size() <= 1;
  for (const WilsonComponent& part : v.components) {
    if (part.props.empty()) continue;
    const ContractedDiagram cd = component_diagram(w, part.props);
    for (PropSet local : connected_flacets(cd.diagram)) {
      const VertexSet flat = propagator_flat(cd.diagram, local).flat;
      v.flacets.push_back({lift_props(local, cd), lift_vertices(flat, cd),
                           is_cyclic_interval(flat, cd.diagram.n())});
    }
  }
  std::sort(v.flacets.begin(), v.flacets.end(),
            [](const FlacetRecord& a, const FlacetRecord& b) { return a.props < b.props; });
  v.positroid = wilson_is_positroid(w, limits);
  v.admissible = v.positroid;
  if (!v.positroid) {
    v.route = Route::kNotPositroid;
  } else if (v.crossings.empty()) {
    v.route = Route::kNonCrossing;
  } else {
    v.route = Route::kFlacetCriterion;
    try {
      v.untangled = untangle(w, limits);
      v.route = Route::kExactUntangled;
    } catch (const Error& e) {
      if (e.code() != Errc::kPreconditionFailed && e.code() != Errc::kNoWitness) throw;
    }
  }
  return v;
}

bool check_contraction_identity(const WilsonDiagram& w, PropSet props, const Limits& limits) {
  const WilsonMatroid whole = build_matroid(w, limits);
  const VertexSet removed = propagator_flat(w, props).flat | propagator_flat(w, PropSet{}).flat;
  const Minor lhs = contract_by(whole.matroid, removed);
  const ContractedDiagram cd = contract_diagram(w, props);
  if (lhs.labels != cd.vertex_labels) return false;
  return matroids_equal(lhs.matroid, build_matroid(cd.diagram, limits).matroid);
}

bool rank_bound_check(const WilsonMatroid& wm, VertexSet vertices) {
  const int r = wm.matroid.rank(vertices);
  return r <= std::min(vertices.size(), prop_of(wm.diagram, vertices).size());
}

}  // namespace wlp
