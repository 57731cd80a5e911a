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


#include "wlp/realization.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "wlp/wilson_matroid.hpp"

namespace wlp {
namespace {

const WilsonDiagram kEightPoint = parse_diagram("n=8; props=(2,4),(4,7),(5,7)");
const WilsonDiagram kCrossedFive = parse_diagram("n=5; props=(1,3),(2,4)");

std::vector<Rational> ints(std::initializer_list<int> values) {
  std::vector<Rational> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

VertexSet row_support(const Matrix& m, int row) {
  VertexSet s;
  for (int c = 0; c < m.cols(); ++c) {
    if (m(row, c) != 0) s = s.with(c + 1);
  }
  return s;
}

TEST(MomentCurve, ValidConfigurations) {
  const TwistorConfig z = moment_curve_config(5, 2, ints({1, 2, 3, 4, 5}), 1);
  EXPECT_TRUE(validate_config(z).valid());
  EXPECT_EQ(z.rows.cols(), 6);
  EXPECT_EQ(z.star[4], 0);
  EXPECT_EQ(z.star[5], 0);
  const TwistorConfig small = moment_curve_config(4, 0, ints({1, 2, 3, 4}), 2);
  const ConfigCertificate cert = validate_config(small);
  EXPECT_TRUE(cert.valid());
  EXPECT_FALSE(cert.minors.empty());
}

TEST(MomentCurve, RejectsBadParameters) {
  EXPECT_THROW(moment_curve_config(4, 1, ints({1, 2, 2, 3}), 0), Error);
  EXPECT_THROW(moment_curve_config(4, 1, ints({0, 1, 2, 3}), 0), Error);
  EXPECT_THROW(moment_curve_config(4, 1, ints({1, 2, 3}), 0), Error);
}

TEST(ValidateConfig, Failures) {
  TwistorConfig z = seeded_config(6, 1, 3);
  TwistorConfig equal_rows = z;
  for (int c = 0; c < z.width(); ++c) equal_rows.rows(1, c) = equal_rows.rows(0, c);
  EXPECT_FALSE(validate_config(equal_rows).valid());
  TwistorConfig zero_star = z;
  for (Rational& q : zero_star.star) q = 0;
  const ConfigCertificate cert = validate_config(zero_star);
  ASSERT_FALSE(cert.valid());
  EXPECT_EQ(cert.violation->family, "augmented-nonzero");
}

TEST(SolvePropagator, MomentumComponentsVanish) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const TwistorConfig z = seeded_config(8, 3, seed);
    for (int r = 0; r < kEightPoint.k(); ++r) {
      const PropagatorSolution sol = solve_propagator(kEightPoint, z, r);
      for (int c = 0; c < 4; ++c) {
        Rational y = sol.coeffs[0] * z.star[c];
        for (int v = 1; v <= 8; ++v) y += sol.coeffs[v] * z.rows(v - 1, c);
        EXPECT_EQ(y, 0);
      }
      EXPECT_NE(sol.coeffs[0], 0);
    }
  }
}

TEST(SolvePropagator, SpansKernelWhenKIsZero) {
  const WilsonDiagram w = parse_diagram("n=4; props=(1,3)");
  const TwistorConfig z = seeded_config(4, 0, 9);
  const PropagatorSolution sol = solve_propagator(w, z, 0);
  // Kernel of x -> x^T A for the 5 x 4 augmented matrix A.
  const Matrix a = z.augmented();
  Matrix transposed(a.cols(), a.rows());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) transposed(c, r) = a(r, c);
  }
  const auto kernel = nullspace(transposed);
  ASSERT_EQ(kernel.size(), 1u);
  const Rational ratio = sol.coeffs[0] / kernel[0][0];
  for (int i = 0; i < 5; ++i) EXPECT_EQ(sol.coeffs[i], ratio * kernel[0][i]);
}

TEST(SolvePropagator, StarScaling) {
  TwistorConfig z = seeded_config(8, 3, 4);
  const PropagatorSolution base = solve_propagator(kEightPoint, z, 1);
  for (Rational& q : z.star) q *= 3;
  const PropagatorSolution scaled = solve_propagator(kEightPoint, z, 1);
  EXPECT_EQ(scaled.coeffs[0], base.coeffs[0]);
  for (int v = 1; v <= 8; ++v) EXPECT_EQ(scaled.coeffs[v], 3 * base.coeffs[v]);
}

TEST(SolvePropagator, AdjacentEdgesGiveZeroRow) {
  const WilsonDiagram w(6, {{1, 2}});
  const PropagatorSolution sol = solve_propagator(w, seeded_config(6, 1, 2), 0);
  for (const Rational& q : sol.coeffs) EXPECT_EQ(q, 0);
}

TEST(BuildRealization, EightPointZeroPattern) {
  const RealizedMatrix rm = build_realization(kEightPoint, seeded_config(8, 3, 1));
  ASSERT_EQ(rm.m.rows(), 3);
  ASSERT_EQ(rm.m.cols(), 8);
  EXPECT_EQ(rm.c.cols(), 9);
  EXPECT_EQ(row_support(rm.m, 0), (VertexSet{2, 3, 4, 5}));
  EXPECT_EQ(row_support(rm.m, 1), (VertexSet{4, 5, 7, 8}));
  EXPECT_EQ(row_support(rm.m, 2), (VertexSet{5, 6, 7, 8}));
}

TEST(BuildRealization, FivePointAndEmpty) {
  const RealizedMatrix rm = build_realization(kCrossedFive, seeded_config(5, 2, 1));
  EXPECT_EQ(row_support(rm.m, 0), (VertexSet{1, 2, 3, 4}));
  EXPECT_EQ(row_support(rm.m, 1), (VertexSet{2, 3, 4, 5}));
  const RealizedMatrix empty = build_realization(parse_diagram("n=6; props="), seeded_config(6, 0, 1));
  EXPECT_EQ(empty.m.rows(), 0);
  EXPECT_EQ(empty.m.cols(), 6);
}

TEST(MatroidOfMatrix, Examples) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const RealizedMatrix rm = build_realization(kEightPoint, seeded_config(8, 3, seed));
    EXPECT_EQ(matroid_of_matrix(rm.m), build_matroid(kEightPoint).matroid);
  }
  Matrix generic(2, 4);
  const int values[2][4] = {{1, 2, 3, 5}, {1, 3, 7, 2}};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 4; ++c) generic(r, c) = values[r][c];
  }
  EXPECT_EQ(matroid_of_matrix(generic), Matroid::uniform(2, 4));
  generic(0, 2) = 0;
  generic(1, 2) = 0;
  const Matroid with_loop = matroid_of_matrix(generic);
  EXPECT_EQ(with_loop.rank(VertexSet{3}), 0);
  Matrix dependent(2, 3);
  for (int c = 0; c < 3; ++c) dependent(0, c) = dependent(1, c) = c + 1;
  EXPECT_THROW(matroid_of_matrix(dependent), Error);
}

TEST(RankTheorems, Examples) {
  const WilsonDiagram over = parse_diagram("n=5; props=(1,3),(2,4),(1,4)");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const RankReport report = check_rank_theorems(over, seeded_config(5, 3, seed));
    EXPECT_TRUE(report.pass);
    EXPECT_LT(report.rank, 3);
    ASSERT_TRUE(report.witness_rank.has_value());
    EXPECT_LT(*report.witness_rank, report.witness_size);
  }
  EXPECT_EQ(check_rank_theorems(kEightPoint, seeded_config(8, 3, 7)).rank, 3);
  EXPECT_EQ(check_rank_theorems(parse_diagram("n=4; props=(1,3)"), seeded_config(4, 1, 7)).rank, 1);
}

TEST(RowspaceEqual, Examples) {
  const TwistorConfig z = seeded_config(5, 2, 5);
  const RealizedMatrix a = build_realization(kCrossedFive, z);
  const RealizedMatrix b = build_realization(parse_diagram("n=5; props=(1,4),(2,4)"), z);
  EXPECT_TRUE(rowspace_equal(a.m, a.m));
  EXPECT_TRUE(rowspace_equal(a.c, b.c));
  EXPECT_TRUE(rowspace_equal(a.m, b.m));
  const TwistorConfig z8 = seeded_config(8, 2, 5);
  const RealizedMatrix c = build_realization(parse_diagram("n=8; props=(1,3),(5,7)"), z8);
  const RealizedMatrix d = build_realization(parse_diagram("n=8; props=(1,3),(4,7)"), z8);
  EXPECT_FALSE(rowspace_equal(c.m, d.m));
}

TEST(ProbeNonnegativity, VacuousAndInconclusive) {
  const auto vacuous = probe_nonnegativity(parse_diagram("n=5; props="), {});
  ASSERT_TRUE(vacuous.has_value());
  EXPECT_EQ(vacuous->m.rows(), 0);
  const WilsonDiagram crossed = parse_diagram("n=8; props=(2,6),(4,8)");
  EXPECT_FALSE(probe_nonnegativity(crossed, probe_configs(8, 2, 8, 1)).has_value());
}

TEST(ProbeNonnegativity, WitnessesAreNonnegative) {
  const WilsonDiagram w = parse_diagram("n=6; props=(1,3)");
  const auto configs = probe_configs(6, 1, 40, 5);
  const auto witness = probe_nonnegativity(w, configs);
  ASSERT_TRUE(witness.has_value());
  ASSERT_LT(witness->config_index, configs.size());
  EXPECT_EQ(rank_of(witness->m), 1);
  for (int c = 0; c < 6; ++c) EXPECT_GE(witness->m(0, c), 0);
  EXPECT_TRUE(rowspace_equal(witness->m, build_realization(w, configs[witness->config_index]).m));
}

// Two disjoint four-vertex supports would need Z_* in the cones of both
// supports, i.e. a relation among moment-curve twistors with at most two
// sign changes. There is none.
TEST(ProbeNonnegativity, DisjointSupportsHaveNoWitness) {
  const WilsonDiagram w = parse_diagram("n=6; props=(1,3),(4,6)");
  EXPECT_FALSE(probe_nonnegativity(w, probe_configs(6, 2, 40, 3)).has_value());
}

// Minors {1,5} and {i,5}, {1,j} force both rows of the crossed five-point
// matrix to be single-signed. Once the first row is, Z_* lies in the cone
// of Z_1..Z_4 and the minors on {1,5} and {3,4} take opposite signs, so no
// row signs make the matrix nonnegative.
TEST(ProbeNonnegativity, CrossedFivePointSignObstruction) {
  const auto configs = probe_configs(5, 2, 40, 17);
  for (const TwistorConfig& z : configs) {
    const RealizedMatrix rm = build_realization(kCrossedFive, z);
    int positive = 0;
    int negative = 0;
    for (int c = 0; c < 4; ++c) {
      positive += sgn(rm.m(0, c)) > 0;
      negative += sgn(rm.m(0, c)) < 0;
    }
    if (positive > 0 && negative > 0) continue;
    EXPECT_LT(sgn(determinant(rm.m.select_cols({0, 4}))) * sgn(determinant(rm.m.select_cols({2, 3}))), 0);
  }
  EXPECT_FALSE(probe_nonnegativity(kCrossedFive, configs).has_value());
}

TEST(Integrand, ZeroZGivesZero) {
  TwistorConfig z = seeded_config(8, 2, 6);
  for (int v = 0; v < 8; ++v) {
    for (int c = 4; c < 6; ++c) z.rows(v, c) = 0;
  }
  const IntegrandValue value = integrand_value(parse_diagram("n=8; props=(1,3),(5,7)"), z);
  EXPECT_EQ(value.value, 0);
  EXPECT_EQ(value.terms.size(), 2u);
}

TEST(Integrand, SinglePropagatorByCofactors) {
  const WilsonDiagram w = parse_diagram("n=6; props=(2,5)");
  const TwistorConfig z = seeded_config(6, 1, 8);
  const IntegrandValue value = integrand_value(w, z);
  const std::vector<int> order = {2, 3, 5, 6};
  std::vector<std::vector<Rational>> a;
  for (int v : order) a.push_back({z.rows(v - 1, 0), z.rows(v - 1, 1), z.rows(v - 1, 2), z.rows(v - 1, 3)});
  Rational denominator = testing::cofactor_det(a);
  Rational linear = 0;
  for (int slot = 0; slot < 4; ++slot) {
    auto replaced = a;
    replaced[slot] = {z.star[0], z.star[1], z.star[2], z.star[3]};
    const Rational minor = testing::cofactor_det(replaced);
    denominator *= minor;
    linear += minor * z.rows(order[slot] - 1, 4);
  }
  Rational expected = linear * linear * linear * linear / denominator;
  EXPECT_EQ(value.value, expected);
}

TEST(Integrand, Errors) {
  const TwistorConfig z = seeded_config(8, 2, 6);
  try {
    integrand_value(parse_diagram("n=8; props=(1,3),(3,6)"), z);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kSharedEdge);
  }
  TwistorConfig flat = z;
  for (int c = 0; c < 4; ++c) flat.rows(1, c) = flat.rows(0, c);
  try {
    integrand_value(parse_diagram("n=8; props=(1,5)"), flat);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDegenerateMinor);
  }
}

// Sweep over small diagrams: realized matroid equals M(W) at three
// configurations and full rank tracks well-definedness.
TEST(RealizationSweep, MatroidAndRankAgree) {
  for (int n = 4; n <= 6; ++n) {
    for (int k = 1; k <= 2; ++k) {
      std::vector<TwistorConfig> configs;
      for (std::uint64_t seed = 0; seed < 3; ++seed) configs.push_back(seeded_config(n, k, 100 + seed));
      for (const WilsonDiagram& w : testing::all_diagrams(n, k)) {
        const bool well_defined = classify_definedness(w).well_defined();
        for (const TwistorConfig& z : configs) {
          EXPECT_TRUE(check_rank_theorems(w, z).pass) << w.to_string();
          if (!well_defined) continue;
          EXPECT_EQ(matroid_of_matrix(build_realization(w, z).m), build_matroid(w).matroid)
              << w.to_string();
        }
        if (well_defined && !is_positroid(build_matroid(w).matroid)) {
          EXPECT_FALSE(probe_nonnegativity(w, configs).has_value()) << w.to_string();
        }
      }
    }
  }
}

}  // namespace
}  // namespace wlp
