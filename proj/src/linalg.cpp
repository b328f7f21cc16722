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

#include "vamos/linalg.hpp"

#include <string>
#include <utility>

#include "vamos/error.hpp"

namespace vamos {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw StructuralError("negative matrix dimension");
}

RationalMatrix RationalMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw StructuralError("row " + std::to_string(i + 1) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " +
                            std::to_string(c));
    }
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RationalMatrix RationalMatrix::select_columns(std::span<const int> columns) const {
  RationalMatrix out(rows_, static_cast<int>(columns.size()));
  for (int i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      out(i, static_cast<int>(k)) = (*this)(i, columns[k]);
    }
  }
  return out;
}

RationalMatrix RationalMatrix::without_column(int column) const {
  std::vector<int> keep;
  for (int j = 0; j < cols_; ++j) {
    if (j != column) keep.push_back(j);
  }
  return select_columns(keep);
}

RationalMatrix RationalMatrix::principal(std::span<const int> indices) const {
  const int k = static_cast<int>(indices.size());
  RationalMatrix out(k, k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) out(a, b) = (*this)(indices[a], indices[b]);
  }
  return out;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw StructuralError("determinant of non-square matrix");
  RationalMatrix a = m;
  const int n = a.rows();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational factor = a(r, col) / a(col, col);
      for (int c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

int matrix_rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  int rank = 0;
  for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < a.rows(); ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(rank, c));
    for (int r = rank + 1; r < a.rows(); ++r) {
      if (a(r, col) == 0) continue;
      const Rational factor = a(r, col) / a(rank, col);
      for (int c = col; c < a.cols(); ++c) a(r, c) -= factor * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

Rational quadratic_form(const RationalMatrix& g, std::span<const Rational> u) {
  if (!g.is_square() || static_cast<int>(u.size()) != g.rows()) {
    throw StructuralError("quadratic form dimension mismatch");
  }
  Rational total = 0;
  for (int i = 0; i < g.rows(); ++i) {
    if (u[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < g.cols(); ++j) {
      if (u[j] != 0) row += g(i, j) * u[j];
    }
    total += u[i] * row;
  }
  return total;
}

}  // namespace vamos
