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

// Exact rationals (GMP) and the small dense linear algebra built on them.

#ifndef WLP_RATIONAL_HPP_
#define WLP_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace wlp {

// Always canonical: reduced, positive denominator.
using Rational = mpq_class;

// "p/q"; integers are written "p/1".
std::string to_string(const Rational& q);
// Accepts "p/q" and "p"; throws Error(kParse).
Rational parse_rational(std::string_view text);

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  // Rows and columns picked by index, in the given order.
  Matrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;
  Matrix select_rows(const std::vector<int>& rows) const;
  Matrix select_cols(const std::vector<int>& cols) const;
  // This matrix above `below`; column counts must agree.
  Matrix stack(const Matrix& below) const;

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Fraction-free (Bareiss) elimination after clearing row denominators.
Rational determinant(const Matrix& m);
int rank_of(const Matrix& m);
// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

}  // namespace wlp

#endif  // WLP_RATIONAL_HPP_
