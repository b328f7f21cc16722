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

#pragma once

#include <span>
#include <vector>

#include "vamos/rational.hpp"

namespace vamos {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  // Throws StructuralError on ragged input.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(int r, int c) { return entries_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return entries_[index(r, c)]; }

  // Exact entrywise symmetry.
  bool is_symmetric() const;

  // Columns in the given order (0-based indices).
  RationalMatrix select_columns(std::span<const int> columns) const;
  RationalMatrix without_column(int column) const;

  // Principal submatrix on the given 0-based indices.
  RationalMatrix principal(std::span<const int> indices) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

// Gaussian elimination with exact pivots. Square input required.
Rational determinant(const RationalMatrix& m);

int matrix_rank(const RationalMatrix& m);

// uᵀ G u.
Rational quadratic_form(const RationalMatrix& g, std::span<const Rational> u);

}  // namespace vamos
