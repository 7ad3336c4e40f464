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

#include <optional>
#include <vector>

#include "fermiupb/dense.hpp"
#include "fermiupb/factorization.hpp"
#include "fermiupb/linalg.hpp"
#include "fermiupb/plucker.hpp"
#include "fermiupb/subspace.hpp"

namespace fupb {

/// Single-particle vectors obtained by contracting psi against every
/// (N-1)-st basis vector. Their span is the support sp(psi) -- the range of
/// the one-party reduced operator.
template <class S>
std::vector<Vec<S>> contraction_columns(const NVector<S>& psi) {
  std::vector<Vec<S>> cols;
  for (const MultiIndex& K : all_multi_indices(psi.m(), psi.n() - 1)) {
    NVector<S> phi(psi.m(), psi.n() - 1);
    phi.set(K, S(1));
    NVector<S> c = interior_product(psi, phi);
    Vec<S> col(psi.m(), S(0));
    for (const auto& [I, v] : c.coeffs()) col[I[0] - 1] = v;
    cols.push_back(std::move(col));
  }
  return cols;
}

/// Basis of sp(psi). Floating backend: orthonormal (left singular vectors of
/// the contraction matrix); exact backend: row-reduced.
template <class S>
std::vector<Vec<S>> support(const NVector<S>& psi) {
  if (psi.is_zero()) throw std::invalid_argument("support: zero vector");
  if (psi.n() == 0) return {};
  std::vector<Vec<S>> cols = contraction_columns(psi);
  if constexpr (is_exact_v<S>) {
    FieldMatrix<RatC> rows;
    for (auto& c : cols) rows.push_back(std::move(c));
    field_rref(rows);
    return rows;
  } else {
    MatrixXcd a(psi.m(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (int i = 0; i < psi.m(); ++i) a(i, static_cast<Eigen::Index>(j)) = cols[j][i];
    Eigen::JacobiSVD<MatrixXcd> svd(a, Eigen::ComputeFullU);
    const double cut = kRankTol * svd.singularValues()(0);
    std::vector<Vec<Cx>> out;
    for (Eigen::Index r = 0; r < svd.singularValues().size(); ++r) {
      if (svd.singularValues()(r) <= cut) break;
      Vec<Cx> v(psi.m());
      for (int i = 0; i < psi.m(); ++i) v[i] = svd.matrixU()(i, r);
      out.push_back(std::move(v));
    }
    return out;
  }
}

/// Recovers a factorization of a decomposable psi (support basis, with the
/// first factor rescaled so the expansion reproduces psi). Returns nullopt
/// when psi is not decomposable: support dimension != N, or the rebuilt
/// expansion misses psi beyond `tol` (floating) / exactly (exact).
template <class S>
std::optional<Factorization<S>> factor_decomposable(const NVector<S>& psi,
                                                    double tol = kZeroTol) {
  if (psi.is_zero() || psi.n() == 0) return std::nullopt;
  std::vector<Vec<S>> basis = support(psi);
  if (static_cast<int>(basis.size()) != psi.n()) return std::nullopt;
  Factorization<S> f(psi.m(), std::move(basis));
  NVector<S> probe = wedge_expand(f);
  if constexpr (is_exact_v<S>) {
    // psi = ratio * probe with a constant ratio iff psi is decomposable.
    const auto& [I, lead] = *probe.coeffs().begin();
    RatC ratio = psi.coeff(I) / lead;
    for (auto& v : f.factors[0]) v *= ratio;
    if (!(wedge_expand(f) - psi).is_zero()) return std::nullopt;
    return f;
  } else {
    // Orthonormal support basis: probe is a unit vector along psi's line.
    Cx scale = inner_product(probe, psi);
    for (auto& v : f.factors[0]) v *= scale;
    NVector<Cx> diff = wedge_expand(f) - psi;
    if (std::sqrt(diff.norm2() / psi.norm2()) > tol) return std::nullopt;
    return f;
  }
}

}  // namespace fupb
