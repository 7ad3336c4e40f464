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

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fermiupb/dense.hpp"
#include "fermiupb/linalg.hpp"
#include "fermiupb/nvector.hpp"

namespace fupb {

/// The antisymmetric coefficient matrix of a 2-vector: K_ij = psi_{(i,j)} for
/// i < j, K_ji = -K_ij. Nonzero decomposable 2-vectors correspond exactly to
/// the antisymmetric matrices of rank 2.
template <class S>
FieldMatrix<S> to_antisymmetric_matrix(const NVector<S>& psi) {
  if (psi.n() != 2)
    throw std::invalid_argument("to_antisymmetric_matrix: grade must be 2");
  FieldMatrix<S> k(psi.m(), std::vector<S>(psi.m(), S(0)));
  for (const auto& [I, v] : psi.coeffs()) {
    k[I[0] - 1][I[1] - 1] = v;
    k[I[1] - 1][I[0] - 1] = -v;
  }
  return k;
}

template <class S>
NVector<S> from_antisymmetric_matrix(const FieldMatrix<S>& k) {
  const int m = static_cast<int>(k.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool bad;
      if constexpr (is_exact_v<S>)
        bad = !(k[i][j] + k[j][i]).is_zero();
      else
        bad = std::abs(k[i][j] + k[j][i]) > kZeroTol * (1.0 + std::abs(k[i][j]));
      if (bad)
        throw std::invalid_argument("from_antisymmetric_matrix: input is not "
                                    "antisymmetric");
    }
  NVector<S> psi(m, 2);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!scalar_is_zero(k[i][j]))
        psi.set(MultiIndex(m, {i + 1, j + 1}), k[i][j]);
  return psi;
}

struct SlaterDecomposition {
  std::vector<double> coeffs;  // c_1 >= c_2 >= ... > 0
  MatrixXcd unitary;           // wedge^2 U maps psi to sum_i c_i e_{2i-1,2i}
};

/// Canonical form of a 2-vector under the diagonal unitary action: psi is
/// unitarily equivalent to sum_i c_i |2i-1> ^ |2i> with uniquely determined
/// c_i. The c_i^2 are the (pairwise degenerate) eigenvalues of the positive
/// semidefinite matrix K K^dagger.
///
/// Pair extraction deflates one eigenplane at a time: for a unit eigenvector
/// u of -K conj(K) at eigenvalue c^2, the partner v = -K conj(u) / c is a
/// unit vector orthogonal to u and K loses exactly the c (u v^T - v u^T)
/// block.
inline SlaterDecomposition slater_decomposition(const NVector<Cx>& psi,
                                                double tol = 1e-12) {
  if (psi.n() != 2)
    throw std::invalid_argument("slater_decomposition: grade must be 2");
  const int m = psi.m();
  MatrixXcd k = MatrixXcd::Zero(m, m);
  for (const auto& [I, v] : psi.coeffs()) {
    k(I[0] - 1, I[1] - 1) = v;
    k(I[1] - 1, I[0] - 1) = -v;
  }
  const double scale = std::sqrt(psi.norm2());

  SlaterDecomposition out;
  std::vector<VectorXcd> pair_rows;
  while (k.norm() > tol * scale && static_cast<int>(pair_rows.size()) + 1 < m) {
    MatrixXcd g = -(k * k.conjugate());
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(g);
    const Eigen::Index top = m - 1;  // eigenvalues ascending
    double c2 = es.eigenvalues()(top);
    if (c2 <= tol * tol * scale * scale) break;
    double c = std::sqrt(c2);
    VectorXcd u = es.eigenvectors().col(top);
    VectorXcd v = -(k * u.conjugate()) / c;
    out.coeffs.push_back(c);
    pair_rows.push_back(u);
    pair_rows.push_back(v);
    k -= c * (u * v.transpose() - v * u.transpose());
  }

  // Rows 2i-1, 2i of U are u_i^dagger, v_i^dagger; the rest complete the
  // unitary from the orthogonal complement of the pair vectors.
  MatrixXcd u_mat = MatrixXcd::Identity(m, m);
  Eigen::Index row = 0;
  for (const VectorXcd& p : pair_rows) u_mat.row(row++) = p.adjoint();
  if (row < m) {
    MatrixXcd pcols(m, row);
    for (Eigen::Index i = 0; i < row; ++i) pcols.col(i) = pair_rows[i];
    Eigen::JacobiSVD<MatrixXcd> svd(pcols, Eigen::ComputeFullU);
    for (Eigen::Index extra = row; extra < m; ++extra)
      u_mat.row(extra) = svd.matrixU().col(extra).adjoint();
  }
  out.unitary = u_mat;
  std::sort(out.coeffs.begin(), out.coeffs.end(), std::greater<>());
  return out;
}

}  // namespace fupb
