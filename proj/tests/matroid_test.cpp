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

#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

namespace wlp {
namespace {

std::vector<VertexSet> sets(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<VertexSet> out;
  for (auto l : lists) out.emplace_back(l);
  return out;
}

TEST(FromBases, UniformAndSmallExamples) {
  const Matroid u24 = Matroid::from_bases(4, sets({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(u24, Matroid::uniform(2, 4));
  EXPECT_EQ(u24.rank(), 2);
  EXPECT_NO_THROW(Matroid::from_bases(3, sets({{1, 2}, {1, 3}})));
}

TEST(FromBases, Rejections) {
  const auto code_of = [](int n, std::vector<VertexSet> bases) {
    try {
      Matroid::from_bases(n, std::move(bases));
    } catch (const Error& e) {
      return e.code();
    }
    ADD_FAILURE();
    return Errc::kParse;
  };
  EXPECT_EQ(code_of(3, {}), Errc::kEmptyBases);
  EXPECT_EQ(code_of(3, sets({{1, 2}, {3}})), Errc::kUnequalSizes);
  EXPECT_EQ(code_of(4, sets({{1, 2}, {3, 4}})), Errc::kExchangeViolation);
  EXPECT_EQ(code_of(2, sets({{1, 3}})), Errc::kOutOfRange);
}

TEST(FromBases, ExchangeErrorCarriesCounterexample) {
  try {
    Matroid::from_bases(4, sets({{1, 2}, {3, 4}}));
    FAIL();
  } catch (const ExchangeError& e) {
    EXPECT_TRUE(e.first().contains(e.element()));
    EXPECT_FALSE(e.second().contains(e.element()));
  }
}

TEST(Rank, Examples) {
  const Matroid u24 = Matroid::uniform(2, 4);
  EXPECT_EQ(u24.rank(VertexSet{}), 0);
  EXPECT_EQ(u24.rank(u24.ground()), 2);
  EXPECT_EQ(u24.rank(VertexSet{1, 2, 3}), 2);
  EXPECT_TRUE(is_independent(u24, VertexSet{}));
  EXPECT_TRUE(is_independent(u24, VertexSet{1, 4}));
  EXPECT_FALSE(is_independent(u24, VertexSet{1, 2, 3}));
}

TEST(Dual, Examples) {
  const Matroid u24 = Matroid::uniform(2, 4);
  EXPECT_EQ(dual(u24), u24);
  const Matroid free = Matroid::uniform(3, 3);
  EXPECT_EQ(dual(free), Matroid::uniform(0, 3));
}

TEST(Minors, IdentitiesOnTrivialSets) {
  const Matroid u24 = Matroid::uniform(2, 4);
  EXPECT_EQ(restrict_to(u24, u24.ground()).matroid, u24);
  EXPECT_EQ(contract_by(u24, VertexSet{}).matroid, u24);
  const Minor m = contract_by(u24, VertexSet{2});
  EXPECT_EQ(m.labels, (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(m.matroid, Matroid::uniform(1, 3));
}

TEST(Circuits, Examples) {
  const auto c = circuits(Matroid::uniform(2, 4));
  EXPECT_EQ(c.size(), 4u);
  for (VertexSet s : c) EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(circuits(Matroid::uniform(3, 3)).empty());
  const Matroid loop = Matroid::uniform(0, 1);
  EXPECT_EQ(circuits(loop), (std::vector<VertexSet>{VertexSet{1}}));
  EXPECT_TRUE(is_circuit(loop, VertexSet{1}));
}

TEST(Closure, Examples) {
  const Matroid u24 = Matroid::uniform(2, 4);
  EXPECT_EQ(closure(u24, VertexSet{}), VertexSet{});
  EXPECT_EQ(closure(u24, VertexSet{1, 2}), u24.ground());
  EXPECT_EQ(closure(u24, VertexSet{1}), VertexSet{1});
  const Matroid with_loop = direct_sum(Matroid::uniform(1, 2), Matroid::uniform(0, 1));
  EXPECT_EQ(closure(with_loop, VertexSet{}), VertexSet{3});
}

TEST(Flats, Examples) {
  const Matroid u24 = Matroid::uniform(2, 4);
  EXPECT_TRUE(is_flat(u24, u24.ground()));
  EXPECT_FALSE(is_flat(u24, VertexSet{1, 2}));
  const auto fs = flats(u24);
  EXPECT_EQ(fs.size(), 6u);  // empty, four points, E
  for (VertexSet a : fs) {
    for (VertexSet b : fs) EXPECT_TRUE(is_flat(u24, a & b));
  }
}

TEST(CyclicSets, Examples) {
  const Matroid u24 = Matroid::uniform(2, 4);
  EXPECT_TRUE(is_cyclic_set(u24, VertexSet{}));
  EXPECT_TRUE(is_cyclic_set(u24, VertexSet{1, 2, 3}));
  EXPECT_TRUE(is_cyclic_set(u24, u24.ground()));
  EXPECT_FALSE(is_cyclic_set(u24, VertexSet{1, 2}));
  EXPECT_EQ(cyclic_flats(u24), (std::vector<VertexSet>{VertexSet{}, u24.ground()}));
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(Matroid::uniform(2, 4)));
  EXPECT_TRUE(is_connected(Matroid()));
  EXPECT_TRUE(is_connected(Matroid::uniform(0, 1)));
  EXPECT_FALSE(is_connected(Matroid::uniform(0, 2)));
  const Matroid with_loop = direct_sum(Matroid::uniform(2, 4), Matroid::uniform(0, 1));
  EXPECT_FALSE(is_connected(with_loop));
  EXPECT_EQ(components(with_loop), (std::vector<VertexSet>{VertexSet{1, 2, 3, 4}, VertexSet{5}}));
}

TEST(DirectSum, RankAddsAndComponentsSplit) {
  const Matroid a = Matroid::uniform(2, 4);
  const Matroid b = Matroid::uniform(1, 3);
  const Matroid s = direct_sum(a, b);
  EXPECT_EQ(s.rank(), 3);
  EXPECT_EQ(s.n(), 7);
  EXPECT_EQ(components(s).size(), 2u);
  EXPECT_EQ(restrict_to(s, VertexSet{5, 6, 7}).matroid, b);
}

TEST(Flacets, UniformMatroid) {
  const auto f = flacets(Matroid::uniform(2, 4));
  // Four singletons, four co-singletons and E; all trivial.
  EXPECT_EQ(f.size(), 9u);
  for (const Flacet& x : f) EXPECT_TRUE(x.trivial);
}

TEST(Flacets, DisconnectedInputRejected) {
  try {
    flacets(Matroid::uniform(0, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDisconnectedInput);
  }
}

TEST(CyclicInterval, Examples) {
  EXPECT_TRUE(is_cyclic_interval(VertexSet{2, 3, 4, 5}, 8));
  EXPECT_TRUE(is_cyclic_interval(VertexSet{8, 1, 2}, 8));
  EXPECT_FALSE(is_cyclic_interval(VertexSet{1, 3}, 8));
  EXPECT_TRUE(is_cyclic_interval(VertexSet{}, 8));
  EXPECT_TRUE(is_cyclic_interval(VertexSet::full(8), 8));
}

TEST(NoncrossingPartition, Examples) {
  EXPECT_TRUE(is_noncrossing_partition(sets({{1, 4}, {2, 3}}), 4));
  EXPECT_FALSE(is_noncrossing_partition(sets({{1, 3}, {2, 4}}), 4));
  EXPECT_TRUE(is_noncrossing_partition(sets({{1}, {2}, {3}, {4}}), 4));
  EXPECT_THROW(is_noncrossing_partition(sets({{1, 2}, {2, 3}}), 4), Error);
  EXPECT_THROW(is_noncrossing_partition(sets({{1, 2}}), 4), Error);
}

TEST(Positroid, UniformAndNonPositroid) {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      EXPECT_TRUE(is_positroid(Matroid::uniform(r, n)));
      EXPECT_TRUE(necklace_positroid_oracle(Matroid::uniform(r, n)));
    }
  }
  // U(1,2) on {1,3} plus U(1,2) on {2,4}: crossing components.
  const Matroid crossed = Matroid::from_bases(4, sets({{1, 2}, {1, 4}, {3, 2}, {3, 4}}));
  EXPECT_FALSE(is_positroid(crossed));
  EXPECT_FALSE(necklace_positroid_oracle(crossed));
}

TEST(Positroid, NonIntervalFlacet) {
  // Rank 2 on 4 elements with {1,3} parallel: connected, flacet {1,3}.
  const Matroid m = Matroid::from_bases(4, sets({{1, 2}, {1, 4}, {2, 3}, {3, 4}, {2, 4}}));
  ASSERT_TRUE(is_connected(m));
  bool saw = false;
  for (const Flacet& f : flacets(m)) saw = saw || f.set == VertexSet{1, 3};
  EXPECT_TRUE(saw);
  EXPECT_FALSE(is_positroid(m));
  EXPECT_FALSE(necklace_positroid_oracle(m));
}

TEST(Necklace, GreedyLexMinimal) {
  const Matroid u24 = Matroid::uniform(2, 4);
  EXPECT_EQ(necklace_term(u24, 1), (VertexSet{1, 2}));
  EXPECT_EQ(necklace_term(u24, 4), (VertexSet{4, 1}));
}

// Randomized algebraic identities on realizable matroids.
class MatroidProperties : public ::testing::TestWithParam<int> {};

TEST_P(MatroidProperties, Identities) {
  std::mt19937_64 rng(1000 + GetParam());
  std::uniform_int_distribution<int> size(1, 7);
  const int n = size(rng);
  const int r = std::uniform_int_distribution<int>(0, n)(rng);
  const Matroid m = testing::random_matroid(rng, n, r);
  EXPECT_NO_THROW(Matroid::from_bases(m.n(), m.bases()));
  EXPECT_EQ(dual(dual(m)), m);
  const VertexSet s(std::uniform_int_distribution<std::uint32_t>(0, (1u << n) - 1)(rng));
  const VertexSet t(std::uniform_int_distribution<std::uint32_t>(0, (1u << n) - 1)(rng));
  const Minor contracted = contract_by(m, s);
  const Minor dual_restricted = restrict_to(dual(m), m.ground() - s);
  EXPECT_EQ(dual(contracted.matroid), dual_restricted.matroid);
  EXPECT_EQ(contracted.labels, dual_restricted.labels);
  EXPECT_LE(m.rank(s | t) + m.rank(s & t), m.rank(s) + m.rank(t));
  if (s.is_subset_of(t)) EXPECT_LE(m.rank(s), m.rank(t));
  const VertexSet cl = closure(m, s);
  EXPECT_TRUE(s.is_subset_of(cl));
  EXPECT_EQ(closure(m, cl), cl);
  EXPECT_TRUE(closure(m, s & t).is_subset_of(closure(m, s)));
  for (VertexSet f : flats(m)) EXPECT_EQ(closure(m, f), f);
  if (is_connected(m)) {
    for (const Flacet& f : flacets(m)) {
      if (f.trivial) continue;
      EXPECT_TRUE(is_flat(m, f.set));
      EXPECT_TRUE(is_cyclic_set(m, f.set));
    }
  }
  EXPECT_EQ(is_positroid(m), necklace_positroid_oracle(m));
  for (VertexSet c : circuits(m)) EXPECT_TRUE(is_circuit(m, c));
  // The direct sum of the components recovers M.
  const auto parts = components(m);
  VertexSet seen;
  for (VertexSet p : parts) {
    EXPECT_FALSE(seen.intersects(p));
    seen |= p;
    int rank_sum = 0;
    for (VertexSet q : parts) rank_sum += m.rank(q);
    EXPECT_EQ(rank_sum, m.rank());
  }
  EXPECT_EQ(seen, m.ground());
}

INSTANTIATE_TEST_SUITE_P(Seeds, MatroidProperties, ::testing::Range(0, 150));

}  // namespace
}  // namespace wlp
