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

#include <Eigen/Dense>

#include "fermiupb/nvector.hpp"

namespace fupb {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

/// Coordinates of psi in the lexicographic e_I basis (dimension C(m, n)).
inline VectorXcd to_dense(const NVector<Cx>& psi) {
  VectorXcd out = VectorXcd::Zero(binomial(psi.m(), psi.n()));
  for (const auto& [I, v] : psi.coeffs()) out[I.rank()] = v;
  return out;
}

inline NVector<Cx> from_dense(int m, int n, const VectorXcd& coords) {
  NVector<Cx> out(m, n);
  for (Eigen::Index r = 0; r < coords.size(); ++r)
    if (coords[r] != Cx(0, 0)) out.set(MultiIndex::unrank(m, n, r), coords[r]);
  return out;
}

/// Applies the N-th exterior power of a single-particle operator A to psi:
/// the compound-matrix action P'_I = sum_J det(A[I, J]) P_J. For unitary A
/// this is the diagonal LU action on the N-fermion space.
inline NVector<Cx> apply_exterior_power(const MatrixXcd& a,
                                        const NVector<Cx>& psi) {
  if (a.rows() != psi.m() || a.cols() != psi.m())
    throw std::invalid_argument("apply_exterior_power: operator shape");
  const int n = psi.n();
  NVector<Cx> out(psi.m(), n);
  for (const MultiIndex& I : all_multi_indices(psi.m(), n)) {
    Cx acc(0);
    for (const auto& [J, v] : psi.coeffs()) {
      MatrixXcd sub(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) sub(r, c) = a(I[r] - 1, J[c] - 1);
      acc += sub.determinant() * v;
    }
    if (acc != Cx(0, 0)) out.set(I, acc);
  }
  return out;
}

}  // namespace fupb
