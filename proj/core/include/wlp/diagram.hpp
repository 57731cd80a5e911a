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

// Combinatorial Wilson loop diagrams: a cyclic polygon on vertices 1..n and
// a set of propagators, each a chord joining two boundary edges. Edge e_i
// joins vertices i and i+1 (mod n).

#ifndef WLP_DIAGRAM_HPP_
#define WLP_DIAGRAM_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wlp/bitset.hpp"
#include "wlp/error.hpp"

namespace wlp {

// A chord between edges `i` and `j`, stored with i < j. (i, j) and (j, i)
// name the same propagator.
struct Propagator {
  int i = 0;
  int j = 0;

  static Propagator between(int a, int b) {
    return a < b ? Propagator{a, b} : Propagator{b, a};
  }

  bool shares_edge(const Propagator& other) const {
    return i == other.i || i == other.j || j == other.i || j == other.j;
  }

  bool operator==(const Propagator&) const = default;
  auto operator<=>(const Propagator&) const = default;
};

// Dependency set V_p = {i, i+1, j, j+1} on an n-gon. Size 3 when the edges
// are adjacent.
VertexSet propagator_support(const Propagator& p, int n);

// True when the two chords interleave on the boundary cycle. Chords sharing
// an edge never cross.
bool propagators_cross(const Propagator& p, const Propagator& q);

class WilsonDiagram {
 public:
  // The empty diagram on zero vertices.
  WilsonDiagram() = default;

  // Sorts propagators into label order. Throws on edge indices outside
  // 1..n, i == j, duplicates, or sizes beyond the desk-scale caps.
  WilsonDiagram(int n, std::vector<Propagator> props);

  int n() const { return n_; }
  int k() const { return static_cast<int>(props_.size()); }
  const std::vector<Propagator>& props() const { return props_; }
  const Propagator& prop(int index) const { return props_[index]; }
  VertexSet support(int index) const { return supports_[index]; }

  VertexSet vertices() const { return VertexSet::full(n_); }
  PropSet all_props() const { return PropSet::full(k()); }

  // Index of `p` in label order, or -1.
  int index_of(const Propagator& p) const;

  // Canonical text form: "n=8; props=(2,4),(4,7),(5,7)".
  std::string to_string() const;

  bool operator==(const WilsonDiagram& other) const {
    return n_ == other.n_ && props_ == other.props_;
  }

 private:
  int n_ = 0;
  std::vector<Propagator> props_;
  std::vector<VertexSet> supports_;
};

enum class Definedness { kWellDefinedGeneric, kExact, kOverdefined };

std::string_view definedness_name(Definedness d);

struct DefinednessClass {
  Definedness tag = Definedness::kWellDefinedGeneric;
  // Propagator subset realizing the (in)equality; empty for generic.
  PropSet witness;

  bool well_defined() const { return tag != Definedness::kOverdefined; }
};

// Parses `n=<int>; props=(i1,j1),(i2,j2),...`. Whitespace is free.
WilsonDiagram parse_diagram(std::string_view text);

// V_P, the union of the dependency sets of P.
VertexSet dependency_set(const WilsonDiagram& w, PropSet props);

// Prop(V): propagators whose dependency set meets V.
PropSet prop_of(const WilsonDiagram& w, VertexSet vertices);

// Scans every nonempty propagator subset. The witness is the smallest
// violating subset (fewest propagators, then lowest mask).
DefinednessClass classify_definedness(const WilsonDiagram& w,
                                      const Limits& limits = {});

// All nonempty P with |V_P| = |P| + 3.
std::vector<PropSet> exact_families(const WilsonDiagram& w,
                                    const Limits& limits = {});

// Index pairs (a, b), a < b, of crossing propagators.
std::vector<std::pair<int, int>> crossing_pairs(const WilsonDiagram& w);

// W|P: same polygon, propagators P.
WilsonDiagram restrict_diagram(const WilsonDiagram& w, PropSet props);

struct ContractedDiagram {
  WilsonDiagram diagram;
  // vertex_labels[v - 1] is the original label of new vertex v.
  std::vector<int> vertex_labels;
  // prop_labels[r] is the original index of new propagator r.
  std::vector<int> prop_labels;
};

// W/P = (P^c, V_{P^c}), relabeled along the induced cyclic order.
ContractedDiagram contract_diagram(const WilsonDiagram& w, PropSet props);

// Exact equivalence of two exact diagrams on the same polygon: matched exact
// families with equal dependency sets and identical leftover propagators.
bool are_exact_equivalent(const WilsonDiagram& a, const WilsonDiagram& b,
                          const Limits& limits = {});

// Replaces the exact families around every crossing with non-crossing
// propagator sets on the same dependency sets. Deterministic: candidate sets
// are tried in increasing bitmask order and the first witness wins.
WilsonDiagram untangle(const WilsonDiagram& w, const Limits& limits = {});

}  // namespace wlp

#endif  // WLP_DIAGRAM_HPP_
