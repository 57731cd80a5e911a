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

// Finite matroids given by an explicit basis collection on {1..n}.

#ifndef WLP_MATROID_HPP_
#define WLP_MATROID_HPP_

#include <vector>

#include "wlp/bitset.hpp"
#include "wlp/error.hpp"

namespace wlp {

class Matroid {
 public:
  // The rank-0 matroid on zero elements.
  Matroid() : bases_{VertexSet{}} {}

  // Validates nonemptiness, equal sizes, range and the exchange axiom. The
  // exchange check is a full pair scan and counts against `limits`.
  static Matroid from_bases(int n, std::vector<VertexSet> bases,
                            const Limits& limits = {});

  // Trusted construction for collections already known to be matroids;
  // sorts and deduplicates only.
  static Matroid from_valid_bases(int n, std::vector<VertexSet> bases);

  static Matroid uniform(int rank, int n);

  int n() const { return n_; }
  int rank() const { return rank_; }
  VertexSet ground() const { return VertexSet::full(n_); }
  // Sorted by bitmask.
  const std::vector<VertexSet>& bases() const { return bases_; }

  int rank(VertexSet s) const;
  bool is_basis(VertexSet s) const;

  bool operator==(const Matroid& other) const {
    return n_ == other.n_ && bases_ == other.bases_;
  }

 private:
  Matroid(int n, std::vector<VertexSet> bases);

  int n_ = 0;
  int rank_ = 0;
  std::vector<VertexSet> bases_;
};

// A minor together with its labels: labels[v - 1] is the element of the
// parent matroid that became element v. Relabeling preserves order.
struct Minor {
  Matroid matroid;
  std::vector<int> labels;
};

bool is_independent(const Matroid& m, VertexSet s);
Matroid dual(const Matroid& m);
Minor restrict_to(const Matroid& m, VertexSet s);
Minor contract_by(const Matroid& m, VertexSet s);

// Order-preserving relabel of `s` (a subset of `within`) onto 1..|within|.
VertexSet compress(VertexSet s, VertexSet within);
// Inverse of compress.
VertexSet expand(VertexSet s, VertexSet within);

// Sorted by bitmask.
std::vector<VertexSet> circuits(const Matroid& m);
bool is_circuit(const Matroid& m, VertexSet s);

VertexSet closure(const Matroid& m, VertexSet s);
bool is_flat(const Matroid& m, VertexSet s);
// Sorted by bitmask; refuses above kMaxFlatScanElements.
std::vector<VertexSet> flats(const Matroid& m);

// True when s is a union of circuits, i.e. M|s has no coloops.
bool is_cyclic_set(const Matroid& m, VertexSet s);
std::vector<VertexSet> cyclic_flats(const Matroid& m);

// Connected components, ordered by smallest element. Loops and coloops are
// singletons. Empty for the empty matroid.
std::vector<VertexSet> components(const Matroid& m);
// A matroid on at most one element is connected.
bool is_connected(const Matroid& m);

// Ground set of `b` follows that of `a`.
Matroid direct_sum(const Matroid& a, const Matroid& b);

struct Flacet {
  VertexSet set;
  // |F| <= 1, F = E, or |E \ F| <= 1.
  bool trivial = false;

  bool operator==(const Flacet&) const = default;
};

// Every nonempty F with M|F and M/F connected, by bitmask. Throws
// kDisconnectedInput for disconnected matroids.
std::vector<Flacet> flacets(const Matroid& m);

// [a, b] in the cyclic order of 1..n, wrap-around allowed. Empty and full
// sets count.
bool is_cyclic_interval(VertexSet s, int n);

// Throws kPreconditionFailed unless `parts` partition 1..n.
bool is_noncrossing_partition(const std::vector<VertexSet>& parts, int n);

// Flacet criterion for connected matroids; non-crossing components, each a
// positroid, otherwise.
bool is_positroid(const Matroid& m);

// Lexicographically minimal basis in the order start < start+1 < ... (mod n).
VertexSet necklace_term(const Matroid& m, int start);

// Independent test: compares the bases with the positroid envelope of the
// Grassmann necklace.
bool necklace_positroid_oracle(const Matroid& m);

inline bool matroids_equal(const Matroid& a, const Matroid& b) { return a == b; }

}  // namespace wlp

#endif  // WLP_MATROID_HPP_
