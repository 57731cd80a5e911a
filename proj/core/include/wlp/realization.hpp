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

// Twistor configurations and the exact-rational realization matrices of a
// Wilson loop diagram.

#ifndef WLP_REALIZATION_HPP_
#define WLP_REALIZATION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlp/diagram.hpp"
#include "wlp/matroid.hpp"
#include "wlp/rational.hpp"

namespace wlp {

// Star row plus n twistors, each of length 4 + k. The first four columns
// are the momentum part, the last k the z part.
struct TwistorConfig {
  int n = 0;
  int k = 0;
  // Moment-curve parameters; empty for hand-built rows.
  std::vector<Rational> t;
  std::vector<Rational> star;
  // n x (4 + k); row v - 1 is Z_v.
  Matrix rows;

  int width() const { return 4 + k; }
  // (n + 1) x (4 + k) with the star row first.
  Matrix augmented() const;
};

// Z_v = (1, t_v, ..., t_v^{3+k}); the star row takes small integers from
// `star_seed` in its first four entries, resampled until every genericity
// minor is nonzero.
TwistorConfig moment_curve_config(int n, int k, std::vector<Rational> t,
                                  std::uint64_t star_seed);

// Moment-curve configuration with integer parameters drawn from `seed`.
TwistorConfig seeded_config(int n, int k, std::uint64_t seed);

// `count` validated configurations; every other one draws its star row as a
// positive combination of the twistors on a random cyclic interval of at
// least four vertices instead of uniformly.
std::vector<TwistorConfig> probe_configs(int n, int k, int count, std::uint64_t seed);

struct MinorCheck {
  std::string family;
  // Row indices into the checked matrix (0 = star row for augmented ones),
  // or column indices when the matrix is wider than tall.
  std::vector<int> index;
  Rational value;
  bool ok = false;
};

struct ConfigCertificate {
  std::vector<MinorCheck> minors;
  std::optional<MinorCheck> violation;

  bool valid() const { return !violation.has_value(); }
};

// Positive ordered maximal minors of the twistor block, no zero maximal
// minor with the star row, and the same two conditions on the momentum
// columns; also requires the star's z part to vanish.
ConfigCertificate validate_config(const TwistorConfig& z);

struct PropagatorSolution {
  Propagator p;
  // Length n + 1; entry 0 is the star coefficient.
  std::vector<Rational> coeffs;
};

// Cramer's rule on the rows (i, i+1, j, j+1): c_0 = -det, c_m = det with
// row m replaced by the star. Adjacent-edge propagators have no nonzero
// solution on generic data and give the zero row. Throws kDegenerateMinor.
PropagatorSolution solve_propagator(const WilsonDiagram& w, const TwistorConfig& z,
                                    int prop_index);

struct RealizedMatrix {
  // k x (n + 1), star column first.
  Matrix c;
  // k x n, c without its star column.
  Matrix m;
};

RealizedMatrix build_realization(const WilsonDiagram& w, const TwistorConfig& z);

// Bases are the column sets with a nonzero maximal minor. Throws
// kRankDeficient unless the rows are independent.
Matroid matroid_of_matrix(const Matrix& m);

struct RankReport {
  int k = 0;
  int rank = 0;
  bool well_defined = false;
  // Rank of the witness rows of C, for overdefined diagrams.
  std::optional<int> witness_rank;
  int witness_size = 0;
  bool pass = false;
};

RankReport check_rank_theorems(const WilsonDiagram& w, const TwistorConfig& z);

bool rowspace_equal(const Matrix& a, const Matrix& b);

struct ProbeWitness {
  std::size_t config_index = 0;
  // signs[r] multiplies row r.
  std::vector<int> signs;
  Matrix m;
};

// First (config, row signs) making every maximal minor nonnegative at full
// rank, or nothing.
std::optional<ProbeWitness> probe_nonnegativity(const WilsonDiagram& w,
                                                const std::vector<TwistorConfig>& configs);

struct IntegrandTerm {
  Propagator p;
  // <Z>, then the star-replaced minors for i, i+1, j, j+1.
  std::vector<Rational> minors;
  Rational numerator;
  Rational denominator;
};

struct IntegrandValue {
  std::vector<IntegrandTerm> terms;
  Rational value;
};

// The z part of propagator r is column 4 + r. Throws kSharedEdge and
// kDegenerateMinor.
IntegrandValue integrand_value(const WilsonDiagram& w, const TwistorConfig& z);

}  // namespace wlp

#endif  // WLP_REALIZATION_HPP_
