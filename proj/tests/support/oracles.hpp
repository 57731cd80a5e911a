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


// Slow, direct implementations used as test oracles. Nothing here shares
// code with the library beyond the value types.

#ifndef WLP_TESTS_SUPPORT_ORACLES_HPP_
#define WLP_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "wlp/diagram.hpp"
#include "wlp/matroid.hpp"
#include "wlp/rational.hpp"

namespace wlp::testing {

inline VertexSet support_of(const Propagator& p, int n) {
  VertexSet s;
  for (int v : {p.i, p.i + 1, p.j, p.j + 1}) s = s.with((v - 1) % n + 1);
  return s;
}

inline int prop_count(const WilsonDiagram& w, VertexSet u) {
  int count = 0;
  for (const Propagator& p : w.props()) {
    if (support_of(p, w.n()).intersects(u)) ++count;
  }
  return count;
}

// The literal subset rule: B is a basis iff |B| = k and no U inside B has
// more vertices than propagators touching it.
inline std::vector<VertexSet> hall_bases(const WilsonDiagram& w) {
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << w.n()); ++mask) {
    const VertexSet b(mask);
    if (b.size() != w.k()) continue;
    bool ok = true;
    for (std::uint32_t sub = mask; sub != 0 && ok; sub = (sub - 1) & mask) {
      const VertexSet u(sub);
      if (u.size() > prop_count(w, u)) ok = false;
    }
    if (ok) out.push_back(b);
  }
  return out;
}

inline bool brute_overdefined(const WilsonDiagram& w) {
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << w.k()); ++mask) {
    VertexSet v;
    int size = 0;
    for (int r = 0; r < w.k(); ++r) {
      if (mask & (1u << r)) {
        v |= support_of(w.prop(r), w.n());
        ++size;
      }
    }
    if (v.size() < size + 3) return true;
  }
  return false;
}

// Laplace expansion along the first row.
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<Rational>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(a[r][j]);
      }
      sub.push_back(row);
    }
    const Rational term = a[0][c] * cofactor_det(sub);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

// Uniformly random propagator set of size k on the n-gon (adjacent-edge
// propagators included).
inline WilsonDiagram random_diagram(std::mt19937_64& rng, int n, int k) {
  std::vector<Propagator> all;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) all.push_back({a, b});
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(k, all.size()));
  return WilsonDiagram(n, all);
}

// Matroid of a random small-integer matrix; rows are resampled until the
// matrix has full row rank.
inline Matroid random_matroid(std::mt19937_64& rng, int n, int r, int spread = 2) {
  std::uniform_int_distribution<int> entry(-spread, spread);
  std::uniform_int_distribution<int> zero_column(0, 5);
  while (true) {
    Matrix m(r, n);
    for (int c = 0; c < n; ++c) {
      const bool zero = zero_column(rng) == 0;
      for (int row = 0; row < r; ++row) m(row, c) = zero ? 0 : entry(rng);
    }
    if (rank_of(m) != r) continue;
    std::vector<VertexSet> bases;
    for_each_combination(n, r, [&](std::uint32_t mask) {
      std::vector<int> cols;
      for (int c = 0; c < n; ++c) {
        if (mask & (1u << c)) cols.push_back(c);
      }
      if (determinant(m.select_cols(cols)) != 0) bases.emplace_back(mask);
    });
    return Matroid::from_valid_bases(n, bases);
  }
}

// All diagrams with exactly k propagators on the n-gon, in lexicographic
// order of their propagator lists.
inline std::vector<WilsonDiagram> all_diagrams(int n, int k) {
  std::vector<Propagator> all;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) all.push_back({a, b});
  }
  std::vector<WilsonDiagram> out;
  for_each_combination(static_cast<int>(all.size()), k, [&](std::uint32_t mask) {
    std::vector<Propagator> props;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask & (1u << i)) props.push_back(all[i]);
    }
    out.emplace_back(n, props);
  });
  return out;
}

}  // namespace wlp::testing

#endif  // WLP_TESTS_SUPPORT_ORACLES_HPP_
