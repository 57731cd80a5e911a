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

#include "wlp/rational.hpp"

#include <cctype>
#include <utility>

#include "wlp/error.hpp"

namespace wlp {
namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Scales each row by the lcm of its denominators. Returns the product of
// the scale factors.
mpz_class integer_rows(const Matrix& m, IntMatrix& out) {
  mpz_class scale = 1;
  out.assign(m.rows(), std::vector<mpz_class>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    mpz_class row_lcm = 1;
    for (int c = 0; c < m.cols(); ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (int c = 0; c < m.cols(); ++c) {
      out[r][c] = m(r, c).get_num() * (row_lcm / m(r, c).get_den());
    }
    scale *= row_lcm;
  }
  return scale;
}

// Bareiss elimination in place. Returns the rank; `det` receives the
// determinant for square input.
int bareiss(IntMatrix& a, int cols, mpz_class* det) {
  const int rows = static_cast<int>(a.size());
  mpz_class prev = 1;
  int sign = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap(a[pivot], a[rank]);
      sign = -sign;
    }
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j) {
        a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  if (det != nullptr) *det = rank == rows && rows == cols ? sign * prev : mpz_class(0);
  return rank;
}

}  // namespace

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto valid_int = [](std::string_view part) {
    std::size_t start = !part.empty() && (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) return false;
    for (std::size_t i = start; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw Error(Errc::kParse, "malformed rational '" + s + "'");
  }
  const mpz_class d(den);
  if (d == 0) throw Error(Errc::kParse, "zero denominator in '" + s + "'");
  Rational q(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
  q.canonicalize();
  return q;
}

Matrix Matrix::select(const std::vector<int>& rows, const std::vector<int>& cols) const {
  Matrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(static_cast<int>(r), static_cast<int>(c)) = (*this)(rows[r], cols[c]);
    }
  }
  return out;
}

Matrix Matrix::select_rows(const std::vector<int>& rows) const {
  std::vector<int> cols(cols_);
  for (int c = 0; c < cols_; ++c) cols[c] = c;
  return select(rows, cols);
}

Matrix Matrix::select_cols(const std::vector<int>& cols) const {
  std::vector<int> rows(rows_);
  for (int r = 0; r < rows_; ++r) rows[r] = r;
  return select(rows, cols);
}

Matrix Matrix::stack(const Matrix& below) const {
  if (below.cols_ != cols_ && below.rows_ > 0 && rows_ > 0) {
    throw Error(Errc::kSizeMismatch, "stacked matrices differ in column count");
  }
  Matrix out(rows_ + below.rows_, rows_ > 0 ? cols_ : below.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
  }
  for (int r = 0; r < below.rows_; ++r) {
    for (int c = 0; c < below.cols_; ++c) out(rows_ + r, c) = below(r, c);
  }
  return out;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::kSizeMismatch, "determinant of a non-square matrix");
  }
  if (m.rows() == 0) return 1;
  IntMatrix a;
  const mpz_class scale = integer_rows(m, a);
  mpz_class det;
  bareiss(a, m.cols(), &det);
  Rational out(det, scale);
  out.canonicalize();
  return out;
}

int rank_of(const Matrix& m) {
  IntMatrix a;
  integer_rows(m, a);
  return bareiss(a, m.cols(), nullptr);
}

std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
  Matrix a = m;
  std::vector<int> pivot_cols;
  int row = 0;
  for (int c = 0; c < a.cols() && row < a.rows(); ++c) {
    int pivot = row;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    const Rational lead = a(row, c);
    for (int j = 0; j < a.cols(); ++j) a(row, j) /= lead;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, c) == 0) continue;
      const Rational factor = a(r, c);
      for (int j = 0; j < a.cols(); ++j) a(r, j) -= factor * a(row, j);
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<std::vector<Rational>> out;
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivot_cols) is_pivot[c] = true;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a(static_cast<int>(r), free);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace wlp
