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

#include <cmath>
#include <optional>
#include <vector>

#include "fermiupb/factorization.hpp"
#include "fermiupb/nvector.hpp"

namespace fupb {

/// Coefficient at a possibly unsorted, possibly repeating index tuple, with
/// the antisymmetric sign convention: P over a repeated tuple is 0, otherwise
/// P_{sigma(I)} = sgn(sigma) P_I.
template <class S>
S signed_coeff(const NVector<S>& psi, std::vector<int> idx) {
  int sign = sort_sign(idx);
  if (sign == 0) return S(0);
  S v = psi.coeff(MultiIndex(psi.m(), std::move(idx)));
  return sign < 0 ? -v : v;
}

/// Values of the quadratic Grassmann-Pluecker relations
///   sum_{t=1}^{N+1} (-1)^t P_{j_1..j_{N-1}, j'_t} P_{j'_1.. ^j'_t ..j'_{N+1}}
/// over all (N-1)-subsets (j) and (N+1)-subsets (j') of [1, M]. The family is
/// redundant; psi is decomposable iff every value vanishes.
template <class S>
std::vector<S> plucker_relation_values(const NVector<S>& psi) {
  std::vector<S> out;
  const int m = psi.m(), n = psi.n();
  if (n <= 1 || n >= m) return out;  // no relations: everything decomposable
  const auto left = all_multi_indices(m, n - 1);
  const auto right = all_multi_indices(m, n + 1);
  for (const MultiIndex& J : left)
    for (const MultiIndex& Jp : right) {
      S acc(0);
      for (int t = 0; t < n + 1; ++t) {
        std::vector<int> first = J.indices();
        first.push_back(Jp[t]);
        std::vector<int> second;
        second.reserve(n);
        for (int u = 0; u < n + 1; ++u)
          if (u != t) second.push_back(Jp[u]);
        S term = signed_coeff(psi, std::move(first)) *
                 psi.coeff(MultiIndex(m, std::move(second)));
        if (t % 2 == 0) term = -term;  // (-1)^t with 1-based t
        acc += term;
      }
      out.push_back(std::move(acc));
    }
  return out;
}

/// Exact decomposability decision on the exact backend.
inline bool is_decomposable_exact(const NVector<RatC>& psi) {
  for (const RatC& v : plucker_relation_values(psi))
    if (!v.is_zero()) return false;
  return true;
}

/// Scale-invariant decomposability residual
///   sqrt(sum |relation|^2) / ||psi||^2 .
/// Zero iff psi is decomposable.
inline double plucker_residual(const NVector<Cx>& psi) {
  if (psi.is_zero())
    throw std::invalid_argument("plucker_residual: zero vector");
  double acc = 0;
  for (const Cx& v : plucker_relation_values(psi)) acc += std::norm(v);
  return std::sqrt(acc) / psi.norm2();
}

inline double plucker_residual(const NVector<RatC>& psi) {
  if (psi.is_zero())
    throw std::invalid_argument("plucker_residual: zero vector");
  return is_decomposable_exact(psi) ? 0.0 : plucker_residual(to_float(psi));
}

}  // namespace fupb
