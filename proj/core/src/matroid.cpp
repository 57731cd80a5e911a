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

#include "wlp/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>

namespace wlp {
namespace {

std::string set_text(VertexSet s) {
  std::string out = "{";
  for (int e : s) {
    if (out.size() > 1) out += ',';
    out += std::to_string(e);
  }
  return out + "}";
}

void sort_unique(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Position of x in the cyclic order starting at `start`.
int cyclic_key(int x, int start, int n) { return (x - start + n) % n; }

std::vector<int> ordered_from(VertexSet s, int start, int n) {
  std::vector<int> keys;
  for (int x : s) keys.push_back(cyclic_key(x, start, n));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

Matroid::Matroid(int n, std::vector<VertexSet> bases)
    : n_(n), bases_(std::move(bases)) {
  sort_unique(bases_);
  rank_ = bases_.front().size();
}

Matroid Matroid::from_valid_bases(int n, std::vector<VertexSet> bases) {
  return Matroid(n, std::move(bases));
}

Matroid Matroid::from_bases(int n, std::vector<VertexSet> bases, const Limits& limits) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(Errc::kBudgetExceeded, "ground set size " + std::to_string(n) +
                                           " outside 0.." + std::to_string(kMaxVertices));
  }
  if (bases.empty()) throw Error(Errc::kEmptyBases, "basis collection is empty");
  const int r = bases.front().size();
  for (VertexSet b : bases) {
    if (b.size() != r) {
      throw Error(Errc::kUnequalSizes, "bases " + set_text(bases.front()) + " and " +
                                           set_text(b) + " differ in size");
    }
    if (!b.is_subset_of(VertexSet::full(n))) {
      throw Error(Errc::kOutOfRange, "basis " + set_text(b) + " leaves 1.." + std::to_string(n));
    }
  }
  Matroid m(n, std::move(bases));
  const std::uint64_t count = m.bases_.size();
  limits.require(count * count, "basis exchange check");
  for (VertexSet b1 : m.bases_) {
    for (VertexSet b2 : m.bases_) {
      for (int x : b1 - b2) {
        bool repaired = false;
        for (int y : b2 - b1) {
          if (m.is_basis(b1.without(x).with(y))) {
            repaired = true;
            break;
          }
        }
        if (!repaired) {
          throw ExchangeError(b1, b2, x,
                              "exchange fails for " + set_text(b1) + ", " + set_text(b2) +
                                  " removing " + std::to_string(x));
        }
      }
    }
  }
  return m;
}

Matroid Matroid::uniform(int rank, int n) {
  if (rank < 0 || rank > n || n > kMaxVertices) {
    throw Error(Errc::kOutOfRange, "no uniform matroid U(" + std::to_string(rank) + "," +
                                       std::to_string(n) + ")");
  }
  std::vector<VertexSet> bases;
  for_each_combination(n, rank, [&](std::uint32_t mask) { bases.emplace_back(mask); });
  return Matroid(n, std::move(bases));
}

int Matroid::rank(VertexSet s) const {
  int best = 0;
  for (VertexSet b : bases_) {
    best = std::max(best, (b & s).size());
    if (best == rank_) break;
  }
  return best;
}

bool Matroid::is_basis(VertexSet s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

bool is_independent(const Matroid& m, VertexSet s) {
  return std::any_of(m.bases().begin(), m.bases().end(),
                     [s](VertexSet b) { return s.is_subset_of(b); });
}

Matroid dual(const Matroid& m) {
  std::vector<VertexSet> bases;
  bases.reserve(m.bases().size());
  for (VertexSet b : m.bases()) bases.push_back(m.ground() - b);
  return Matroid::from_valid_bases(m.n(), std::move(bases));
}

VertexSet compress(VertexSet s, VertexSet within) {
  VertexSet out;
  int position = 1;
  for (int x : within) {
    if (s.contains(x)) out = out.with(position);
    ++position;
  }
  return out;
}

VertexSet expand(VertexSet s, VertexSet within) {
  VertexSet out;
  int position = 1;
  for (int x : within) {
    if (s.contains(position)) out = out.with(x);
    ++position;
  }
  return out;
}

Minor restrict_to(const Matroid& m, VertexSet s) {
  s &= m.ground();
  const int r = m.rank(s);
  std::vector<VertexSet> bases;
  for (VertexSet b : m.bases()) {
    if ((b & s).size() == r) bases.push_back(compress(b & s, s));
  }
  return {Matroid::from_valid_bases(s.size(), std::move(bases)), s.labels()};
}

Minor contract_by(const Matroid& m, VertexSet s) {
  s &= m.ground();
  const VertexSet rest = m.ground() - s;
  const int r = m.rank(s);
  std::vector<VertexSet> bases;
  for (VertexSet b : m.bases()) {
    if ((b & s).size() == r) bases.push_back(compress(b - s, rest));
  }
  return {Matroid::from_valid_bases(rest.size(), std::move(bases)), rest.labels()};
}

std::vector<VertexSet> circuits(const Matroid& m) {
  // Every circuit is the fundamental circuit of some basis and element.
  std::vector<VertexSet> out;
  for (VertexSet b : m.bases()) {
    for (int e : m.ground() - b) {
      VertexSet c = VertexSet::single(e);
      for (int x : b) {
        if (m.is_basis(b.without(x).with(e))) c = c.with(x);
      }
      out.push_back(c);
    }
  }
  sort_unique(out);
  return out;
}

bool is_circuit(const Matroid& m, VertexSet s) {
  if (s.empty() || is_independent(m, s)) return false;
  for (int x : s) {
    if (!is_independent(m, s.without(x))) return false;
  }
  return true;
}

VertexSet closure(const Matroid& m, VertexSet s) {
  const int r = m.rank(s);
  VertexSet out = s;
  for (int e : m.ground() - s) {
    if (m.rank(s.with(e)) == r) out = out.with(e);
  }
  return out;
}

bool is_flat(const Matroid& m, VertexSet s) { return closure(m, s) == s; }

std::vector<VertexSet> flats(const Matroid& m) {
  if (m.n() > kMaxFlatScanElements) {
    throw Error(Errc::kBudgetExceeded, "flat enumeration is limited to " +
                                           std::to_string(kMaxFlatScanElements) + " elements");
  }
  // Every flat is the closure of an independent set, and every independent
  // set lies inside a basis.
  std::vector<VertexSet> independent;
  for (VertexSet b : m.bases()) {
    for (std::uint32_t sub = b.bits();; sub = (sub - 1) & b.bits()) {
      independent.emplace_back(sub);
      if (sub == 0) break;
    }
  }
  sort_unique(independent);
  std::vector<VertexSet> out;
  out.reserve(independent.size());
  for (VertexSet s : independent) out.push_back(closure(m, s));
  sort_unique(out);
  return out;
}

bool is_cyclic_set(const Matroid& m, VertexSet s) {
  const int r = m.rank(s);
  for (int x : s) {
    if (m.rank(s.without(x)) != r) return false;
  }
  return true;
}

std::vector<VertexSet> cyclic_flats(const Matroid& m) {
  std::vector<VertexSet> out;
  for (VertexSet f : flats(m)) {
    if (is_cyclic_set(m, f)) out.push_back(f);
  }
  return out;
}

std::vector<VertexSet> components(const Matroid& m) {
  std::vector<int> parent(m.n() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (VertexSet c : circuits(m)) {
    const int head = find_root(parent, c.first());
    for (int x : c) {
      const int root = find_root(parent, x);
      if (root != head) parent[root] = head;
    }
  }
  std::vector<VertexSet> out;
  std::vector<int> slot(m.n() + 1, -1);
  for (int x = 1; x <= m.n(); ++x) {
    const int root = find_root(parent, x);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]] = out[slot[root]].with(x);
  }
  return out;
}

bool is_connected(const Matroid& m) {
  return m.n() <= 1 || components(m).size() == 1;
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.n() + b.n() > kMaxVertices) {
    throw Error(Errc::kBudgetExceeded, "direct sum exceeds " + std::to_string(kMaxVertices) +
                                           " elements");
  }
  std::vector<VertexSet> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (VertexSet x : a.bases()) {
    for (VertexSet y : b.bases()) bases.emplace_back(x.bits() | (y.bits() << a.n()));
  }
  return Matroid::from_valid_bases(a.n() + b.n(), std::move(bases));
}

std::vector<Flacet> flacets(const Matroid& m) {
  if (!is_connected(m)) {
    throw Error(Errc::kDisconnectedInput, "flacets need a connected matroid");
  }
  if (m.n() > kMaxFlatScanElements) {
    throw Error(Errc::kBudgetExceeded, "flacet enumeration is limited to " +
                                           std::to_string(kMaxFlatScanElements) + " elements");
  }
  std::vector<Flacet> out;
  const VertexSet ground = m.ground();
  for (std::uint32_t mask = 1; mask <= ground.bits(); ++mask) {
    const VertexSet f(mask);
    if (!is_connected(restrict_to(m, f).matroid)) continue;
    if (!is_connected(contract_by(m, f).matroid)) continue;
    const bool trivial = f.size() <= 1 || (ground - f).size() <= 1;
    out.push_back({f, trivial});
  }
  return out;
}

bool is_cyclic_interval(VertexSet s, int n) {
  if (s.empty() || s == VertexSet::full(n)) return true;
  int starts = 0;
  for (int x : s) {
    const int prev = x == 1 ? n : x - 1;
    if (!s.contains(prev)) ++starts;
  }
  return starts <= 1;
}

bool is_noncrossing_partition(const std::vector<VertexSet>& parts, int n) {
  VertexSet seen;
  for (VertexSet p : parts) {
    if (p.empty() || seen.intersects(p) || !p.is_subset_of(VertexSet::full(n))) {
      throw Error(Errc::kPreconditionFailed, "blocks do not partition 1.." + std::to_string(n));
    }
    seen |= p;
  }
  if (seen != VertexSet::full(n)) {
    throw Error(Errc::kPreconditionFailed, "blocks do not cover 1.." + std::to_string(n));
  }
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      // Walking the cycle over both blocks, interleaving shows up as at
      // least four changes of block.
      const VertexSet both = parts[a] | parts[b];
      int changes = 0;
      const int last = 32 - std::countl_zero(both.bits());
      bool prev_in_a = parts[a].contains(last);
      for (int x : both) {
        const bool in_a = parts[a].contains(x);
        if (in_a != prev_in_a) ++changes;
        prev_in_a = in_a;
      }
      if (changes >= 4) return false;
    }
  }
  return true;
}

bool is_positroid(const Matroid& m) {
  if (is_connected(m)) {
    for (const Flacet& f : flacets(m)) {
      if (!is_cyclic_interval(f.set, m.n())) return false;
    }
    return true;
  }
  const std::vector<VertexSet> parts = components(m);
  if (!is_noncrossing_partition(parts, m.n())) return false;
  return std::all_of(parts.begin(), parts.end(), [&m](VertexSet part) {
    return is_positroid(restrict_to(m, part).matroid);
  });
}

VertexSet necklace_term(const Matroid& m, int start) {
  VertexSet chosen;
  int r = 0;
  for (int step = 0; step < m.n() && r < m.rank(); ++step) {
    const int x = (start - 1 + step) % m.n() + 1;
    if (m.rank(chosen.with(x)) > r) {
      chosen = chosen.with(x);
      ++r;
    }
  }
  return chosen;
}

bool necklace_positroid_oracle(const Matroid& m) {
  const int n = m.n();
  if (n == 0) return true;
  std::vector<std::vector<int>> necklace;
  for (int start = 1; start <= n; ++start) {
    necklace.push_back(ordered_from(necklace_term(m, start), start, n));
  }
  // The envelope: all rank-sized sets above every necklace term in the
  // correspondingly rotated Gale order. It always contains the bases.
  bool equal = true;
  for_each_combination(n, m.rank(), [&](std::uint32_t mask) {
    const VertexSet s(mask);
    bool inside = true;
    for (int start = 1; start <= n && inside; ++start) {
      const std::vector<int> keys = ordered_from(s, start, n);
      const std::vector<int>& floor = necklace[start - 1];
      for (std::size_t t = 0; t < keys.size(); ++t) {
        if (keys[t] < floor[t]) {
          inside = false;
          break;
        }
      }
    }
    if (inside != m.is_basis(s)) equal = false;
    return equal;
  });
  return equal;
}

}  // namespace wlp
