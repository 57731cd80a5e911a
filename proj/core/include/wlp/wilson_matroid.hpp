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

// The matroid M(W) of a Wilson loop diagram and the diagram-side criteria
// for its connectivity, flacets and positroidness.

#ifndef WLP_WILSON_MATROID_HPP_
#define WLP_WILSON_MATROID_HPP_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "wlp/bitset.hpp"
#include "wlp/diagram.hpp"
#include "wlp/error.hpp"
#include "wlp/matroid.hpp"

namespace wlp {

struct WilsonMatroid {
  WilsonDiagram diagram;
  Matroid matroid;
};

// Size of a maximum matching of `vertices` into distinct incident
// propagators; this is the rank of `vertices` in M(W).
int transversal_rank(const WilsonDiagram& w, VertexSet vertices);

// Bases are the k-subsets of [n] matching perfectly into the propagators.
// Throws OverdefinedError carrying the witness for overdefined diagrams.
WilsonMatroid build_matroid(const WilsonDiagram& w, const Limits& limits = {});

struct PropagatorFlat {
  PropSet props;
  // F(P) = V_P \ V_{P^c}.
  VertexSet flat;
};

PropagatorFlat propagator_flat(const WilsonDiagram& w, PropSet props);

struct WilsonComponent {
  PropSet props;
  VertexSet vertices;

  bool operator==(const WilsonComponent&) const = default;
};

// Each vertex touching no propagator is a singleton component; the rest are
// the classes of propagators linked by shared vertices. Ordered by smallest
// vertex.
std::vector<WilsonComponent> wilson_components(const WilsonDiagram& w,
                                               const Limits& limits = {});
bool wilson_is_connected(const WilsonDiagram& w, const Limits& limits = {});

// Propagator sets P whose flat F(P) is a flacet of M(W), for connected W:
// F(P) is a cyclic flat with rk F(P) = |P|, W/P is connected, and P does
// not split along F(P).
std::vector<PropSet> propagator_flacets(const WilsonDiagram& w,
                                        const Limits& limits = {});

bool wilson_is_positroid(const WilsonDiagram& w, const Limits& limits = {});

enum class Route {
  kNonCrossing,
  kExactUntangled,
  kFlacetCriterion,
  kNotPositroid,
  kOverdefined,
};

std::string_view route_name(Route route);

struct FlacetRecord {
  // In the labels of the input diagram.
  PropSet props;
  VertexSet flat;
  // Judged in the cyclic order of the component the flacet belongs to.
  bool cyclic_interval = false;
};

struct AdmissibilityVerdict {
  bool well_defined = false;
  // Meaningful only when well_defined.
  bool connected = false;
  bool positroid = false;
  bool admissible = false;
  Route route = Route::kOverdefined;
  DefinednessClass definedness;
  std::vector<WilsonComponent> components;
  std::vector<FlacetRecord> flacets;
  std::vector<std::pair<int, int>> crossings;
  std::optional<WilsonDiagram> untangled;
};

// Never throws for budget-sized input; admissible = well defined and
// positroid.
AdmissibilityVerdict is_admissible(const WilsonDiagram& w, const Limits& limits = {});

// Compares M(W)/(F(P) u F(empty)) with M(W/P) under the relabeling of W/P.
bool check_contraction_identity(const WilsonDiagram& w, PropSet props,
                                const Limits& limits = {});

// rk V <= min(|V|, |Prop(V)|).
bool rank_bound_check(const WilsonMatroid& wm, VertexSet vertices);

}  // namespace wlp

#endif  // WLP_WILSON_MATROID_HPP_
