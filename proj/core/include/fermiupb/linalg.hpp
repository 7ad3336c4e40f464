/*
 * Copyright 2026 The fermiupb authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <vector>

#include "fermiupb/scalar.hpp"

namespace fupb {

/// Dense matrix over an exact field, row-major. Used for the small exact
/// eliminations (rank, null space, linear solves); the floating backend goes
/// through Eigen instead.
template <class F>
using FieldMatrix = std::vector<std::vector<F>>;

/// Determinant of a square field matrix by Gaussian elimination.
template <class F>
F field_det(FieldMatrix<F> a) {
  const int n = static_cast<int>(a.size());
  F det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!scalar_is_zero(a[r][col])) {
        pivot = r;
        break;
      }
    if (pivot < 0) return F(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (scalar_is_zero(a[r][col])) continue;
      F factor = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

/// In-place reduced row echelon form. Returns the pivot columns; the rank is
/// their count.
template <class F>
std::vector<int> field_rref(FieldMatrix<F>& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r)
      if (!scalar_is_zero(a[r][col])) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[row]);
    F inv = F(1) / a[row][col];
    for (int c = col; c < cols; ++c) a[row][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || scalar_is_zero(a[r][col])) continue;
      F factor = a[r][col];
      for (int c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  a.resize(pivots.size());
  return pivots;
}

template <class F>
int field_rank(FieldMatrix<F> a) {
  return static_cast<int>(field_rref(a).size());
}

/// Basis of the right null space {x : a x = 0}.
template <class F>
std::vector<std::vector<F>> field_nullspace(FieldMatrix<F> a) {
  if (a.empty()) return {};
  const int cols = static_cast<int>(a[0].size());
  std::vector<int> pivots = field_rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> x(cols, F(0));
    x[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Solves a x = b for square nonsingular a.
template <class F>
std::vector<F> field_solve(FieldMatrix<F> a, std::vector<F> b) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
  std::vector<int> pivots = field_rref(a);
  if (static_cast<int>(pivots.size()) != n)
    throw std::domain_error("field_solve: singular system");
  std::vector<F> x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

}  // namespace fupb
