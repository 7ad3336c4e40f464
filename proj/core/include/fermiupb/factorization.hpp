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

#include "fermiupb/linalg.hpp"
#include "fermiupb/nvector.hpp"

namespace fupb {

template <class S>
using Vec = std::vector<S>;  // a vector in C^M, dense

/// An ordered list of N vectors in C^M representing the decomposable
/// N-vector v_1 ^ ... ^ v_N (a Slater determinant). Linearly dependent
/// factors are allowed and expand to zero.
template <class S>
struct Factorization {
  int m = 0;
  std::vector<Vec<S>> factors;

  Factorization() = default;
  Factorization(int m_, std::vector<Vec<S>> f) : m(m_), factors(std::move(f)) {
    for (const auto& v : factors) {
      if (static_cast<int>(v.size()) != m)
        throw std::invalid_argument("Factorization: factor of wrong dimension");
      for (const S& x : v) checked(x);
    }
    if (static_cast<int>(factors.size()) > m)
      throw std::invalid_argument("Factorization: more factors than dimension");
  }

  int n() const { return static_cast<int>(factors.size()); }

  /// The basis factorization (|i1>, ..., |iN>).
  static Factorization basis(int m_, const std::vector<int>& indices) {
    std::vector<Vec<S>> f;
    for (int i : indices) {
      Vec<S> v(m_, S(0));
      v.at(i - 1) = S(1);
      f.push_back(std::move(v));
    }
    return Factorization(m_, std::move(f));
  }
};

/// <u|v> on C^M, conjugate-linear in the first slot.
template <class S>
S vec_inner(const Vec<S>& u, const Vec<S>& v) {
  S acc(0);
  for (std::size_t i = 0; i < u.size(); ++i) acc += conj_of(u[i]) * v[i];
  return acc;
}

/// Expands v_1 ^ ... ^ v_N into the orthonormal basis {e_I}: the coefficient
/// at I = (i_1 < ... < i_N) is the N x N minor of the factor matrix on rows
/// i_1..i_N.
template <class S>
NVector<S> wedge_expand(const Factorization<S>& f) {
  const int m = f.m, n = f.n();
  NVector<S> out(m, n);
  for (const MultiIndex& I : all_multi_indices(m, n)) {
    FieldMatrix<S> sub(n, std::vector<S>(n));
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) sub[r][s] = f.factors[s][I[r] - 1];
    S d = field_det(sub);
    if (!scalar_is_zero(d)) out.set(I, d);
  }
  return out;
}

/// Inner product of two decomposable vectors as the determinant of the
/// N x N Gram matrix [<u_i|w_j>]. Agrees with
/// inner_product(wedge_expand(u), wedge_expand(w)) by the Binet-Cauchy
/// formula.
template <class S>
S gram_inner_product(const Factorization<S>& u, const Factorization<S>& w) {
  if (u.m != w.m || u.n() != w.n())
    throw std::invalid_argument("gram_inner_product: shape mismatch");
  const int n = u.n();
  FieldMatrix<S> g(n, std::vector<S>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = vec_inner(u.factors[i], w.factors[j]);
  return field_det(g);
}

/// ||v_1 ^ ... ^ v_N||^2 = det of the factor Gram matrix (real, >= 0).
template <class S>
auto factorization_norm2(const Factorization<S>& f) {
  S g = gram_inner_product(f, f);
  if constexpr (is_exact_v<S>)
    return g.re();
  else
    return g.real();
}

inline Factorization<Cx> to_float(const Factorization<RatC>& f) {
  std::vector<Vec<Cx>> factors;
  for (const auto& v : f.factors) {
    Vec<Cx> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i].to_complex();
    factors.push_back(std::move(w));
  }
  return Factorization<Cx>(f.m, std::move(factors));
}
inline const Factorization<Cx>& to_float(const Factorization<Cx>& f) {
  return f;
}

}  // namespace fupb
