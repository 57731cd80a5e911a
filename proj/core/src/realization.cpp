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

#include <algorithm>
#include <bit>
#include <random>
#include <string>
#include <utility>

#include "wlp/error.hpp"

namespace wlp {
namespace {

constexpr int kMomentum = 4;
constexpr int kMaxResamples = 256;

std::vector<int> iota_vector(int count, int first = 0) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

std::vector<int> mask_indices(std::uint32_t mask) {
  std::vector<int> out;
  for (int bit = 0; mask != 0; ++bit, mask >>= 1) {
    if (mask & 1u) out.push_back(bit);
  }
  return out;
}

// Checks every maximal minor of `a` with `accept`, appending to `cert`.
// Stops at the first rejected minor.
template <class Accept>
bool check_maximal_minors(const Matrix& a, const std::string& family, Accept accept,
                          ConfigCertificate& cert) {
  const bool by_rows = a.rows() >= a.cols();
  const int size = std::min(a.rows(), a.cols());
  const int universe = by_rows ? a.rows() : a.cols();
  bool ok = true;
  for_each_combination(universe, size, [&](std::uint32_t mask) {
    MinorCheck check;
    check.family = family;
    check.index = mask_indices(mask);
    check.value = determinant(by_rows ? a.select_rows(check.index) : a.select_cols(check.index));
    check.ok = accept(check.value);
    cert.minors.push_back(check);
    if (!check.ok) {
      cert.violation = check;
      ok = false;
    }
    return ok;
  });
  return ok;
}

Matrix moment_rows(int n, int k, const std::vector<Rational>& t) {
  Matrix rows(n, kMomentum + k);
  for (int v = 0; v < n; ++v) {
    Rational power = 1;
    for (int c = 0; c < kMomentum + k; ++c) {
      rows(v, c) = power;
      power *= t[v];
    }
  }
  return rows;
}

// Momentum rows of V_p in the order i, i+1, j, j+1, as 1-based vertices.
std::vector<int> support_order(const Propagator& p, int n) {
  const auto wrap = [n](int v) { return (v - 1) % n + 1; };
  return {p.i, wrap(p.i + 1), p.j, wrap(p.j + 1)};
}

Matrix momentum_block(const TwistorConfig& z, const std::vector<int>& vertices) {
  Matrix a(static_cast<int>(vertices.size()), kMomentum);
  for (std::size_t r = 0; r < vertices.size(); ++r) {
    for (int c = 0; c < kMomentum; ++c) a(static_cast<int>(r), c) = z.rows(vertices[r] - 1, c);
  }
  return a;
}

Matrix replace_row_with_star(Matrix a, int row, const TwistorConfig& z) {
  for (int c = 0; c < kMomentum; ++c) a(row, c) = z.star[c];
  return a;
}

TwistorConfig with_star(int n, int k, std::vector<Rational> t, std::vector<Rational> star) {
  TwistorConfig z;
  z.n = n;
  z.k = k;
  z.rows = moment_rows(n, k, t);
  z.t = std::move(t);
  z.star = std::move(star);
  return z;
}

std::vector<Rational> seeded_parameters(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> step(1, 3);
  std::vector<Rational> t;
  int value = 0;
  for (int v = 0; v < n; ++v) {
    value += step(rng);
    t.emplace_back(value);
  }
  return t;
}

}  // namespace

Matrix TwistorConfig::augmented() const {
  Matrix star_row(1, width());
  for (int c = 0; c < width(); ++c) star_row(0, c) = star[c];
  return star_row.stack(rows);
}

ConfigCertificate validate_config(const TwistorConfig& z) {
  ConfigCertificate cert;
  if (z.rows.rows() != z.n || z.rows.cols() != z.width() ||
      static_cast<int>(z.star.size()) != z.width()) {
    throw Error(Errc::kInvalidConfig, "configuration shape does not match n and k");
  }
  for (int c = kMomentum; c < z.width(); ++c) {
    if (z.star[c] != 0) {
      MinorCheck check{"star-z-zero", {c}, z.star[c], false};
      cert.minors.push_back(check);
      cert.violation = check;
      return cert;
    }
  }
  const auto positive = [](const Rational& q) { return sgn(q) > 0; };
  const auto nonzero = [](const Rational& q) { return sgn(q) != 0; };
  const Matrix momentum = z.rows.select_cols(iota_vector(kMomentum));
  const Matrix augmented = z.augmented();
  const Matrix momentum_augmented = augmented.select_cols(iota_vector(kMomentum));
  check_maximal_minors(z.rows, "twistor-positive", positive, cert) &&
      check_maximal_minors(augmented, "augmented-nonzero", nonzero, cert) &&
      check_maximal_minors(momentum, "momentum-positive", positive, cert) &&
      check_maximal_minors(momentum_augmented, "momentum-augmented-nonzero", nonzero, cert);
  return cert;
}

TwistorConfig moment_curve_config(int n, int k, std::vector<Rational> t,
                                  std::uint64_t star_seed) {
  if (n < 1 || k < 0 || static_cast<int>(t.size()) != n) {
    throw Error(Errc::kInvalidConfig, "moment curve needs n >= 1, k >= 0 and n parameters");
  }
  for (int v = 0; v < n; ++v) {
    if (sgn(t[v]) <= 0 || (v > 0 && t[v] <= t[v - 1])) {
      throw Error(Errc::kInvalidConfig, "moment curve parameters must be positive and increasing");
    }
  }
  std::mt19937_64 rng(star_seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    std::vector<Rational> star(kMomentum + k, Rational(0));
    for (int c = 0; c < kMomentum; ++c) star[c] = entry(rng);
    TwistorConfig z = with_star(n, k, t, std::move(star));
    if (validate_config(z).valid()) return z;
  }
  throw Error(Errc::kResampleExhausted,
              "no generic star row after " + std::to_string(kMaxResamples) + " draws");
}

TwistorConfig seeded_config(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> t = seeded_parameters(n, rng);
  return moment_curve_config(n, k, std::move(t), rng());
}

std::vector<TwistorConfig> probe_configs(int n, int k, int count, std::uint64_t seed) {
  std::vector<TwistorConfig> out;
  std::mt19937_64 rng(seed);
  for (int index = 0; index < count; ++index) {
    if (index % 2 == 0) {
      out.push_back(seeded_config(n, k, rng()));
      continue;
    }
    std::vector<Rational> t = seeded_parameters(n, rng);
    const Matrix rows = moment_rows(n, k, t);
    std::uniform_int_distribution<int> weight(1, 5);
    std::uniform_int_distribution<int> start(0, n - 1);
    std::uniform_int_distribution<int> length(std::min(n, kMomentum), n);
    bool found = false;
    for (int attempt = 0; attempt < kMaxResamples && !found; ++attempt) {
      // Weights on a random cyclic interval of twistors.
      std::vector<Rational> star(kMomentum + k, Rational(0));
      const int first = start(rng);
      const int span = length(rng);
      for (int step = 0; step < span; ++step) {
        const int v = (first + step) % n;
        const int w = weight(rng);
        for (int c = 0; c < kMomentum; ++c) star[c] += w * rows(v, c);
      }
      TwistorConfig z = with_star(n, k, t, std::move(star));
      if (validate_config(z).valid()) {
        out.push_back(std::move(z));
        found = true;
      }
    }
    if (!found) {
      throw Error(Errc::kResampleExhausted, "no generic positive-combination star row");
    }
  }
  return out;
}

PropagatorSolution solve_propagator(const WilsonDiagram& w, const TwistorConfig& z,
                                    int prop_index) {
  if (z.n != w.n()) throw Error(Errc::kSizeMismatch, "configuration and diagram differ in n");
  const Propagator& p = w.prop(prop_index);
  PropagatorSolution sol{p, std::vector<Rational>(w.n() + 1, Rational(0))};
  const VertexSet support = w.support(prop_index);

  if (support.size() < kMomentum) {
    // Columns: star, then the support vertices. Generic data leaves only
    // the trivial solution.
    Matrix system(kMomentum, support.size() + 1);
    for (int c = 0; c < kMomentum; ++c) {
      system(c, 0) = z.star[c];
      int col = 1;
      for (int v : support) system(c, col++) = z.rows(v - 1, c);
    }
    const auto kernel = nullspace(system);
    if (!kernel.empty()) {
      sol.coeffs[0] = kernel.front()[0];
      int col = 1;
      for (int v : support) sol.coeffs[v] = kernel.front()[col++];
    }
    return sol;
  }

  const std::vector<int> order = support_order(p, w.n());
  const Matrix a = momentum_block(z, order);
  const Rational det = determinant(a);
  if (det == 0) {
    throw Error(Errc::kDegenerateMinor, "zero momentum minor for propagator (" +
                                            std::to_string(p.i) + "," + std::to_string(p.j) + ")");
  }
  sol.coeffs[0] = -det;
  for (int slot = 0; slot < kMomentum; ++slot) {
    sol.coeffs[order[slot]] = determinant(replace_row_with_star(a, slot, z));
  }
  for (int c = 0; c < kMomentum; ++c) {
    Rational y = sol.coeffs[0] * z.star[c];
    for (int v = 1; v <= w.n(); ++v) y += sol.coeffs[v] * z.rows(v - 1, c);
    if (y != 0) {
      throw Error(Errc::kDegenerateMinor, "Cramer solution fails the momentum constraint");
    }
  }
  return sol;
}

RealizedMatrix build_realization(const WilsonDiagram& w, const TwistorConfig& z) {
  RealizedMatrix out{Matrix(w.k(), w.n() + 1), Matrix(w.k(), w.n())};
  for (int r = 0; r < w.k(); ++r) {
    const PropagatorSolution sol = solve_propagator(w, z, r);
    for (int c = 0; c <= w.n(); ++c) out.c(r, c) = sol.coeffs[c];
    for (int c = 1; c <= w.n(); ++c) out.m(r, c - 1) = sol.coeffs[c];
  }
  return out;
}

Matroid matroid_of_matrix(const Matrix& m) {
  if (rank_of(m) != m.rows()) {
    throw Error(Errc::kRankDeficient, "matrix rows are linearly dependent");
  }
  std::vector<VertexSet> bases;
  for_each_combination(m.cols(), m.rows(), [&](std::uint32_t mask) {
    if (determinant(m.select_cols(mask_indices(mask))) != 0) {
      bases.emplace_back(mask);
    }
  });
  return Matroid::from_valid_bases(m.cols(), std::move(bases));
}

RankReport check_rank_theorems(const WilsonDiagram& w, const TwistorConfig& z) {
  RankReport report;
  const DefinednessClass cls = classify_definedness(w);
  const RealizedMatrix rm = build_realization(w, z);
  report.k = w.k();
  report.rank = rank_of(rm.m);
  report.well_defined = cls.well_defined();
  report.pass = (report.rank == report.k) == report.well_defined;
  if (!cls.well_defined()) {
    std::vector<int> rows;
    for (int r : cls.witness) rows.push_back(r);
    report.witness_size = cls.witness.size();
    report.witness_rank = rank_of(rm.c.select_rows(rows));
    report.pass = report.pass && *report.witness_rank < report.witness_size;
  }
  return report;
}

bool rowspace_equal(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) {
    throw Error(Errc::kSizeMismatch, "row spaces live in different dimensions");
  }
  const int ra = rank_of(a);
  return ra == rank_of(b) && rank_of(a.stack(b)) == ra;
}

std::optional<ProbeWitness> probe_nonnegativity(const WilsonDiagram& w,
                                                const std::vector<TwistorConfig>& configs) {
  const int k = w.k();
  if (k == 0) return ProbeWitness{0, {}, Matrix(0, w.n())};
  for (std::size_t index = 0; index < configs.size(); ++index) {
    RealizedMatrix rm;
    try {
      rm = build_realization(w, configs[index]);
    } catch (const Error& e) {
      if (e.code() != Errc::kDegenerateMinor) throw;
      continue;
    }
    if (rank_of(rm.m) != k) continue;
    // Flipping row signs multiplies every maximal minor by the product of
    // the signs, so only that product matters.
    bool all_nonneg = true;
    bool all_nonpos = true;
    for_each_combination(w.n(), k, [&](std::uint32_t mask) {
      const int s = sgn(determinant(rm.m.select_cols(mask_indices(mask))));
      if (s < 0) all_nonneg = false;
      if (s > 0) all_nonpos = false;
      return all_nonneg || all_nonpos;
    });
    if (!all_nonneg && !all_nonpos) continue;
    for (std::uint32_t flips = 0; flips < (std::uint32_t{1} << k); ++flips) {
      const bool odd = std::popcount(flips) % 2 == 1;
      if (odd ? !all_nonpos : !all_nonneg) continue;
      ProbeWitness witness{index, std::vector<int>(k, 1), rm.m};
      for (int r = 0; r < k; ++r) {
        if (flips & (std::uint32_t{1} << r)) {
          witness.signs[r] = -1;
          for (int c = 0; c < w.n(); ++c) witness.m(r, c) = -witness.m(r, c);
        }
      }
      return witness;
    }
  }
  return std::nullopt;
}

IntegrandValue integrand_value(const WilsonDiagram& w, const TwistorConfig& z) {
  if (z.n != w.n() || z.k < w.k()) {
    throw Error(Errc::kSizeMismatch, "configuration too small for the diagram");
  }
  for (int a = 0; a < w.k(); ++a) {
    for (int b = a + 1; b < w.k(); ++b) {
      if (w.prop(a).shares_edge(w.prop(b))) {
        throw Error(Errc::kSharedEdge, "propagators share a boundary edge");
      }
    }
  }
  IntegrandValue out;
  out.value = 1;
  for (int r = 0; r < w.k(); ++r) {
    IntegrandTerm term;
    term.p = w.prop(r);
    const std::vector<int> order = support_order(term.p, w.n());
    const Matrix a = momentum_block(z, order);
    term.minors.push_back(determinant(a));
    Rational linear = 0;
    for (int slot = 0; slot < kMomentum; ++slot) {
      term.minors.push_back(determinant(replace_row_with_star(a, slot, z)));
      linear += term.minors.back() * z.rows(order[slot] - 1, kMomentum + r);
    }
    term.denominator = 1;
    for (const Rational& d : term.minors) {
      if (d == 0) {
        throw Error(Errc::kDegenerateMinor,
                    "zero minor in the integrand of (" + std::to_string(term.p.i) + "," +
                        std::to_string(term.p.j) + ")");
      }
      term.denominator *= d;
    }
    term.numerator = linear * linear * linear * linear;
    out.value *= term.numerator / term.denominator;
    out.terms.push_back(std::move(term));
  }
  return out;
}

}  // namespace wlp
