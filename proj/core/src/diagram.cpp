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

#include "wlp/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

namespace wlp {
namespace {

int wrap(int v, int n) { return ((v - 1) % n + n) % n + 1; }

void require_subset(const WilsonDiagram& w, PropSet props) {
  if (!props.is_subset_of(w.all_props())) {
    throw Error(Errc::kNotSubset, "propagator subset is not contained in the diagram");
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  WilsonDiagram parse() {
    skip_ws();
    expect_word("n");
    expect('=');
    const int n = parse_int();
    expect(';');
    expect_word("props");
    expect('=');
    std::vector<std::pair<int, int>> raw;
    skip_ws();
    if (!at_end()) {
      raw.push_back(parse_pair());
      skip_ws();
      while (!at_end() && peek() == ',') {
        ++pos_;
        raw.push_back(parse_pair());
        skip_ws();
      }
    }
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");

    if (n < 1) {
      throw Error(Errc::kOutOfRange, "vertex count must be at least 1");
    }
    std::vector<Propagator> props;
    props.reserve(raw.size());
    for (auto [a, b] : raw) {
      if (a < 1 || a > n || b < 1 || b > n) {
        throw Error(Errc::kOutOfRange,
                    "edge index out of range in (" + std::to_string(a) + "," +
                        std::to_string(b) + ") for n=" + std::to_string(n));
      }
      props.push_back(Propagator::between(a, b));
    }
    return WilsonDiagram(n, std::move(props));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(Errc::kParse,
                "column " + std::to_string(pos_ + 1) + ": " + message);
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) {
      fail("expected '" + std::string(word) + "'");
    }
    pos_ += word.size();
  }

  int parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail("expected integer");
    if (digits.size() > 9) fail("integer too large");
    return std::stoi(digits);
  }

  std::pair<int, int> parse_pair() {
    expect('(');
    const int a = parse_int();
    expect(',');
    const int b = parse_int();
    expect(')');
    return {a, b};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Disjoint-set forest over a handful of indices.
class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

bool set_has_crossing(const std::vector<Propagator>& props) {
  for (std::size_t a = 0; a < props.size(); ++a) {
    for (std::size_t b = a + 1; b < props.size(); ++b) {
      if (propagators_cross(props[a], props[b])) return true;
    }
  }
  return false;
}

}  // namespace

VertexSet propagator_support(const Propagator& p, int n) {
  return VertexSet{wrap(p.i, n), wrap(p.i + 1, n), wrap(p.j, n), wrap(p.j + 1, n)};
}

bool propagators_cross(const Propagator& p, const Propagator& q) {
  if (p.shares_edge(q)) return false;
  const auto inside = [&p](int e) { return p.i < e && e < p.j; };
  return inside(q.i) != inside(q.j);
}

WilsonDiagram::WilsonDiagram(int n, std::vector<Propagator> props)
    : n_(n), props_(std::move(props)) {
  if (n_ < 0 || n_ > kMaxVertices) {
    throw Error(Errc::kBudgetExceeded,
                "vertex count " + std::to_string(n_) + " outside 0.." +
                    std::to_string(kMaxVertices));
  }
  if (static_cast<int>(props_.size()) > kMaxPropagators) {
    throw Error(Errc::kBudgetExceeded,
                "propagator count " + std::to_string(props_.size()) +
                    " exceeds " + std::to_string(kMaxPropagators));
  }
  for (Propagator& p : props_) {
    p = Propagator::between(p.i, p.j);
    if (p.i < 1 || p.j > n_) {
      throw Error(Errc::kOutOfRange, "edge index out of range for n=" + std::to_string(n_));
    }
    if (p.i == p.j) {
      throw Error(Errc::kSelfPropagator,
                  "propagator (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                      ") joins an edge to itself");
    }
  }
  std::sort(props_.begin(), props_.end());
  const auto dup = std::adjacent_find(props_.begin(), props_.end());
  if (dup != props_.end()) {
    throw Error(Errc::kDuplicatePropagator,
                "duplicate propagator (" + std::to_string(dup->i) + "," +
                    std::to_string(dup->j) + ")");
  }
  supports_.reserve(props_.size());
  for (const Propagator& p : props_) supports_.push_back(propagator_support(p, n_));
}

int WilsonDiagram::index_of(const Propagator& p) const {
  const Propagator c = Propagator::between(p.i, p.j);
  const auto it = std::lower_bound(props_.begin(), props_.end(), c);
  if (it == props_.end() || *it != c) return -1;
  return static_cast<int>(it - props_.begin());
}

std::string WilsonDiagram::to_string() const {
  std::ostringstream out;
  out << "n=" << n_ << "; props=";
  for (std::size_t r = 0; r < props_.size(); ++r) {
    if (r > 0) out << ',';
    out << '(' << props_[r].i << ',' << props_[r].j << ')';
  }
  return out.str();
}

std::string_view definedness_name(Definedness d) {
  switch (d) {
    case Definedness::kWellDefinedGeneric: return "WellDefinedGeneric";
    case Definedness::kExact: return "Exact";
    case Definedness::kOverdefined: return "Overdefined";
  }
  return "Unknown";
}

WilsonDiagram parse_diagram(std::string_view text) { return Parser(text).parse(); }

VertexSet dependency_set(const WilsonDiagram& w, PropSet props) {
  require_subset(w, props);
  VertexSet out;
  for (int r : props) out |= w.support(r);
  return out;
}

PropSet prop_of(const WilsonDiagram& w, VertexSet vertices) {
  PropSet out;
  for (int r = 0; r < w.k(); ++r) {
    if (w.support(r).intersects(vertices)) out = out.with(r);
  }
  return out;
}

DefinednessClass classify_definedness(const WilsonDiagram& w, const Limits& limits) {
  const int k = w.k();
  limits.require(std::uint64_t{1} << k, "definedness scan");
  // support[mask] built incrementally from mask without its lowest bit.
  std::vector<VertexSet> support(std::size_t{1} << k);
  std::optional<PropSet> over;
  std::optional<PropSet> exact;
  const auto better = [](PropSet a, const std::optional<PropSet>& b) {
    return !b || a.size() < b->size() || (a.size() == b->size() && a < *b);
  };
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    const int low = std::countr_zero(mask);
    support[mask] = support[mask & (mask - 1)] | w.support(low);
    const PropSet p(mask);
    const int slack = support[mask].size() - (p.size() + 3);
    if (slack < 0 && better(p, over)) over = p;
    if (slack == 0 && better(p, exact)) exact = p;
  }
  if (over) return {Definedness::kOverdefined, *over};
  if (exact) return {Definedness::kExact, *exact};
  return {};
}

std::vector<PropSet> exact_families(const WilsonDiagram& w, const Limits& limits) {
  const int k = w.k();
  limits.require(std::uint64_t{1} << k, "exact family scan");
  std::vector<PropSet> out;
  std::vector<VertexSet> support(std::size_t{1} << k);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    support[mask] = support[mask & (mask - 1)] | w.support(std::countr_zero(mask));
    const PropSet p(mask);
    if (support[mask].size() == p.size() + 3) out.push_back(p);
  }
  return out;
}

std::vector<std::pair<int, int>> crossing_pairs(const WilsonDiagram& w) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < w.k(); ++a) {
    for (int b = a + 1; b < w.k(); ++b) {
      if (propagators_cross(w.prop(a), w.prop(b))) out.emplace_back(a, b);
    }
  }
  return out;
}

WilsonDiagram restrict_diagram(const WilsonDiagram& w, PropSet props) {
  require_subset(w, props);
  std::vector<Propagator> kept;
  for (int r : props) kept.push_back(w.prop(r));
  return WilsonDiagram(w.n(), std::move(kept));
}

ContractedDiagram contract_diagram(const WilsonDiagram& w, PropSet props) {
  require_subset(w, props);
  const PropSet rest = w.all_props() - props;
  const VertexSet kept_vertices = dependency_set(w, rest);

  ContractedDiagram out;
  out.vertex_labels = kept_vertices.labels();
  std::vector<int> relabel(w.n() + 1, 0);
  for (std::size_t v = 0; v < out.vertex_labels.size(); ++v) {
    relabel[out.vertex_labels[v]] = static_cast<int>(v) + 1;
  }
  // An edge (i, i+1) of a kept propagator keeps both endpoints, and they stay
  // consecutive in the induced order, so the edge index maps with vertex i.
  std::vector<Propagator> props_out;
  for (int r : rest) {
    props_out.push_back(Propagator::between(relabel[w.prop(r).i], relabel[w.prop(r).j]));
    out.prop_labels.push_back(r);
  }
  out.diagram = WilsonDiagram(kept_vertices.size(), std::move(props_out));
  return out;
}

bool are_exact_equivalent(const WilsonDiagram& a, const WilsonDiagram& b,
                          const Limits& limits) {
  if (a.n() != b.n()) {
    throw Error(Errc::kSizeMismatch, "exact equivalence needs diagrams on the same polygon");
  }
  for (const WilsonDiagram* d : {&a, &b}) {
    if (classify_definedness(*d, limits).tag != Definedness::kExact) {
      throw Error(Errc::kNotExact, "diagram " + d->to_string() + " is not exact");
    }
  }

  const std::vector<PropSet> fa = exact_families(a, limits);
  const std::vector<PropSet> fb = exact_families(b, limits);
  std::vector<std::pair<PropSet, PropSet>> matches;
  for (PropSet p : fa) {
    const VertexSet vp = dependency_set(a, p);
    for (PropSet q : fb) {
      if (q.size() == p.size() && dependency_set(b, q) == vp) matches.emplace_back(p, q);
    }
  }

  const auto residual_equal = [&](PropSet used_a, PropSet used_b) {
    std::vector<Propagator> ra;
    std::vector<Propagator> rb;
    for (int r : a.all_props() - used_a) ra.push_back(a.prop(r));
    for (int r : b.all_props() - used_b) rb.push_back(b.prop(r));
    return ra == rb;
  };

  // Reachable (covered-in-a, covered-in-b) states under unions of matched
  // families, starting from no families at all.
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::pair<PropSet, PropSet>> frontier{{PropSet{}, PropSet{}}};
  seen.insert(0);
  while (!frontier.empty()) {
    const auto [ua, ub] = frontier.back();
    frontier.pop_back();
    if (residual_equal(ua, ub)) return true;
    for (const auto& [p, q] : matches) {
      const PropSet na = ua | p;
      const PropSet nb = ub | q;
      const std::uint64_t key = (std::uint64_t{na.bits()} << 32) | nb.bits();
      if (seen.insert(key).second) {
        limits.require(seen.size(), "exact equivalence search");
        frontier.emplace_back(na, nb);
      }
    }
  }
  return false;
}

WilsonDiagram untangle(const WilsonDiagram& w, const Limits& limits) {
  const auto crossings = crossing_pairs(w);
  if (crossings.empty()) return w;
  if (!classify_definedness(w, limits).well_defined()) {
    throw Error(Errc::kPreconditionFailed, "cannot untangle an overdefined diagram");
  }

  // Crossing propagators grouped into connected blocks of the crossing graph.
  UnionFind blocks(w.k());
  PropSet crossing_props;
  for (auto [x, y] : crossings) {
    blocks.join(x, y);
    crossing_props = crossing_props.with(x).with(y);
  }
  std::vector<PropSet> block_sets;
  for (int r : crossing_props) {
    const int root = blocks.find(r);
    auto it = std::find_if(block_sets.begin(), block_sets.end(),
                           [&](PropSet s) { return blocks.find(s.first()) == root; });
    if (it == block_sets.end()) {
      block_sets.push_back(PropSet::single(r));
    } else {
      *it = it->with(r);
    }
  }

  // Smallest exact family around each block; overlapping families merge,
  // and a union of overlapping exact families in a well-defined diagram is
  // again exact.
  std::vector<PropSet> exact = exact_families(w, limits);
  std::stable_sort(exact.begin(), exact.end(), [](PropSet x, PropSet y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::vector<PropSet> families;
  for (PropSet block : block_sets) {
    auto it = std::find_if(exact.begin(), exact.end(),
                           [&](PropSet f) { return block.is_subset_of(f); });
    if (it == exact.end()) {
      throw Error(Errc::kPreconditionFailed,
                  "a set of crossing propagators does not extend to an exact family");
    }
    families.push_back(*it);
  }
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t x = 0; x < families.size() && !merged; ++x) {
      for (std::size_t y = x + 1; y < families.size() && !merged; ++y) {
        if (families[x].intersects(families[y])) {
          families[x] |= families[y];
          families.erase(families.begin() + static_cast<std::ptrdiff_t>(y));
          merged = true;
        }
      }
    }
  }
  std::sort(families.begin(), families.end());

  PropSet replaced;
  for (PropSet f : families) replaced |= f;
  std::vector<Propagator> fixed;
  for (int r : w.all_props() - replaced) fixed.push_back(w.prop(r));

  struct Slot {
    VertexSet support;
    int size;
    std::vector<Propagator> candidates;
  };
  std::vector<Slot> slots;
  for (PropSet f : families) {
    Slot slot{dependency_set(w, f), f.size(), {}};
    for (int a = 1; a <= w.n(); ++a) {
      for (int b = a + 1; b <= w.n(); ++b) {
        const Propagator p{a, b};
        if (propagator_support(p, w.n()).is_subset_of(slot.support)) {
          slot.candidates.push_back(p);
        }
      }
    }
    if (slot.candidates.size() > 32) {
      throw Error(Errc::kBudgetExceeded, "untangle candidate list exceeds 32 propagators");
    }
    limits.require(binomial(static_cast<int>(slot.candidates.size()), slot.size),
                   "untangle candidate search");
    slots.push_back(std::move(slot));
  }

  std::vector<Propagator> chosen = fixed;
  std::optional<WilsonDiagram> result;
  const auto conflicts = [&](const Propagator& p) {
    for (const Propagator& q : chosen) {
      if (q == p || propagators_cross(p, q)) return true;
    }
    return false;
  };

  // Depth-first over slots; each slot tries its candidate sets in order.
  const auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == slots.size()) {
      WilsonDiagram candidate(w.n(), chosen);
      if (!classify_definedness(candidate, limits).well_defined()) return false;
      result = std::move(candidate);
      return true;
    }
    const Slot& slot = slots[depth];
    bool found = false;
    for_each_combination(static_cast<int>(slot.candidates.size()), slot.size,
                         [&](std::uint32_t mask) {
      std::vector<Propagator> pick;
      VertexSet covered;
      for (int bit : PropSet(mask)) {
        pick.push_back(slot.candidates[bit]);
        covered |= propagator_support(slot.candidates[bit], w.n());
      }
      if (covered != slot.support || set_has_crossing(pick)) return true;
      for (const Propagator& p : pick) {
        if (conflicts(p)) return true;
      }
      const std::size_t mark = chosen.size();
      chosen.insert(chosen.end(), pick.begin(), pick.end());
      found = self(self, depth + 1);
      chosen.resize(mark);
      return !found;
    });
    return found;
  };
  if (!search(search, 0)) {
    throw Error(Errc::kNoWitness,
                "no non-crossing replacement found for " + w.to_string());
  }
  return *result;
}

}  // namespace wlp
