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

#include <vector>

#include "fermiupb/dense.hpp"
#include "fermiupb/linalg.hpp"
#include "fermiupb/nvector.hpp"

namespace fupb {

/// Rank threshold for floating matrices: singular values below
/// 1e-10 * sigma_max count as zero.
inline constexpr double kRankTol = 1e-10;

/// A subspace of the N-th exterior power of C^M, spanned by a finite list of
/// NVectors. The reduced basis (orthonormal on the floating backend,
/// row-reduced on the exact backend) is computed eagerly at construction, so
/// spans are immutable and safe to share across threads.
template <class S>
class Subspace;

template <>
class Subspace<Cx> {
 public:
  Subspace(int m, int n, std::vector<NVector<Cx>> basis)
      : m_(m), n_(n), basis_(std::move(basis)) {
    const Eigen::Index dim = binomial(m_, n_);
    if (basis_.empty()) {
      ortho_ = MatrixXcd::Zero(dim, 0);
      null_ = MatrixXcd::Identity(dim, dim);
      return;
    }
    MatrixXcd a(dim, static_cast<Eigen::Index>(basis_.size()));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      basis_[i].require_same_shape(NVector<Cx>(m_, n_));
      a.col(static_cast<Eigen::Index>(i)) = to_dense(basis_[i]);
    }
    Eigen::JacobiSVD<MatrixXcd> svd(a, Eigen::ComputeFullU);
    Eigen::Index rank = 0;
    if (svd.singularValues().size() > 0 && svd.singularValues()(0) > 0.0) {
      const double cut = kRankTol * svd.singularValues()(0);
      while (rank < svd.singularValues().size() &&
             svd.singularValues()(rank) > cut)
        ++rank;
    }
    ortho_ = svd.matrixU().leftCols(rank);
    null_ = svd.matrixU().rightCols(dim - rank);
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(ortho_.cols()); }
  const std::vector<NVector<Cx>>& basis() const { return basis_; }

  /// Orthonormal basis, one column per direction.
  const MatrixXcd& ortho() const { return ortho_; }

  NVector<Cx> ortho_vector(int i) const {
    return from_dense(m_, n_, ortho_.col(i));
  }

  /// Orthogonal projection onto the subspace.
  NVector<Cx> project(const NVector<Cx>& psi) const {
    psi.require_same_shape(NVector<Cx>(m_, n_));
    VectorXcd x = to_dense(psi);
    return from_dense(m_, n_, ortho_ * (ortho_.adjoint() * x));
  }

  /// ||psi - project(psi)|| / ||psi||.
  double distance(const NVector<Cx>& psi) const {
    VectorXcd x = to_dense(psi);
    return (x - ortho_ * (ortho_.adjoint() * x)).norm() / x.norm();
  }

  Subspace orthogonal_complement() const {
    std::vector<NVector<Cx>> vs;
    for (Eigen::Index c = 0; c < null_.cols(); ++c)
      vs.push_back(from_dense(m_, n_, null_.col(c)));
    return Subspace(m_, n_, std::move(vs));
  }

 private:
  int m_, n_;
  std::vector<NVector<Cx>> basis_;
  MatrixXcd ortho_;  // orthonormal basis of the span
  MatrixXcd null_;   // orthonormal basis of the orthogonal complement
};

template <>
class Subspace<RatC> {
 public:
  Subspace(int m, int n, std::vector<NVector<RatC>> basis)
      : m_(m), n_(n), basis_(std::move(basis)) {
    const std::int64_t dim = binomial(m_, n_);
    FieldMatrix<RatC> rows;
    for (const auto& v : basis_) {
      v.require_same_shape(NVector<RatC>(m_, n_));
      std::vector<RatC> row(dim, RatC(0));
      for (const auto& [I, s] : v.coeffs()) row[I.rank()] = s;
      rows.push_back(std::move(row));
    }
    field_rref(rows);
    reduced_ = std::move(rows);
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(reduced_.size()); }
  const std::vector<NVector<RatC>>& basis() const { return basis_; }

  /// Row-reduced exact basis of the span.
  std::vector<NVector<RatC>> reduced_basis() const {
    std::vector<NVector<RatC>> out;
    for (const auto& row : reduced_) out.push_back(row_to_vector(row));
    return out;
  }

  /// Exact orthogonal projection, via the Gram system of the reduced basis.
  NVector<RatC> project(const NVector<RatC>& psi) const {
    psi.require_same_shape(NVector<RatC>(m_, n_));
    const int r = dim();
    if (r == 0) return NVector<RatC>(m_, n_);
    std::vector<NVector<RatC>> b = reduced_basis();
    FieldMatrix<RatC> gram(r, std::vector<RatC>(r));
    std::vector<RatC> rhs(r);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) gram[i][j] = inner_product(b[i], b[j]);
      rhs[i] = inner_product(b[i], psi);
    }
    std::vector<RatC> z = field_solve(std::move(gram), std::move(rhs));
    NVector<RatC> out(m_, n_);
    for (int i = 0; i < r; ++i) out += b[i] * z[i];
    return out;
  }

  bool contains(const NVector<RatC>& psi) const {
    return (psi - project(psi)).is_zero();
  }

  /// Exact orthogonal complement: the null space of the conjugated basis
  /// matrix.
  Subspace orthogonal_complement() const {
    const std::int64_t dim_full = binomial(m_, n_);
    FieldMatrix<RatC> conj_rows;
    for (const auto& row : reduced_) {
      std::vector<RatC> c(dim_full);
      for (std::int64_t i = 0; i < dim_full; ++i) c[i] = row[i].conj();
      conj_rows.push_back(std::move(c));
    }
    std::vector<NVector<RatC>> out;
    for (auto& x : field_nullspace(std::move(conj_rows)))
      out.push_back(row_to_vector(x));
    return Subspace(m_, n_, std::move(out));
  }

  Subspace<Cx> to_float_subspace() const {
    std::vector<NVector<Cx>> vs;
    for (const auto& v : basis_) vs.push_back(to_float(v));
    return Subspace<Cx>(m_, n_, std::move(vs));
  }

 private:
  NVector<RatC> row_to_vector(const std::vector<RatC>& row) const {
    NVector<RatC> v(m_, n_);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!row[i].is_zero())
        v.set(MultiIndex::unrank(m_, n_, static_cast<std::int64_t>(i)), row[i]);
    return v;
  }

  int m_, n_;
  std::vector<NVector<RatC>> basis_;
  FieldMatrix<RatC> reduced_;
};

template <class S>
Subspace<S> span(int m, int n, std::vector<NVector<S>> vs) {
  return Subspace<S>(m, n, std::move(vs));
}

}  // namespace fupb
