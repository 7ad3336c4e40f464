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
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fermiupb/multi_index.hpp"
#include "fermiupb/scalar.hpp"

namespace fupb {

/// An element of the N-th exterior power of C^M, stored as a sparse map from
/// strictly increasing index tuples to coefficients. Missing keys are zero;
/// the zero vector is the empty map.
template <class S>
class NVector {
 public:
  using Scalar = S;
  using Map = std::map<MultiIndex, S>;

  NVector() : m_(0), n_(0) {}
  NVector(int m, int n) : m_(m), n_(n) {
    if (n < 0 || n > m) throw std::invalid_argument("NVector: need 0 <= n <= m");
  }

  static NVector basis(int m, std::vector<int> indices) {
    NVector v(m, static_cast<int>(indices.size()));
    v.set(MultiIndex(m, std::move(indices)), S(1));
    return v;
  }

  int m() const { return m_; }
  int n() const { return n_; }
  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  S coeff(const MultiIndex& I) const {
    auto it = coeffs_.find(I);
    return it == coeffs_.end() ? S(0) : it->second;
  }

  void set(const MultiIndex& I, const S& value) {
    check_key(I);
    if (scalar_is_zero(value))
      coeffs_.erase(I);
    else
      coeffs_[I] = checked(value);
  }

  void add_to(const MultiIndex& I, const S& value) {
    check_key(I);
    auto [it, inserted] = coeffs_.try_emplace(I, S(0));
    it->second += checked(value);
    if (scalar_is_zero(it->second)) coeffs_.erase(it);
  }

  NVector& operator+=(const NVector& o) {
    require_same_shape(o);
    for (const auto& [I, v] : o.coeffs_) add_to(I, v);
    return *this;
  }
  NVector& operator-=(const NVector& o) {
    require_same_shape(o);
    for (const auto& [I, v] : o.coeffs_) add_to(I, -v);
    return *this;
  }
  NVector& operator*=(const S& s) {
    if (scalar_is_zero(s)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [I, v] : coeffs_) v *= s;
    return *this;
  }
  friend NVector operator+(NVector a, const NVector& b) { return a += b; }
  friend NVector operator-(NVector a, const NVector& b) { return a -= b; }
  friend NVector operator*(NVector a, const S& s) { return a *= s; }
  friend NVector operator*(const S& s, NVector a) { return a *= s; }
  NVector operator-() const {
    NVector out(*this);
    for (auto& [I, v] : out.coeffs_) v = -v;
    return out;
  }
  friend bool operator==(const NVector& a, const NVector& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  /// Squared norm; exact rational on the exact backend.
  auto norm2() const {
    decltype(abs2(S(0))) acc(0);
    for (const auto& [I, v] : coeffs_) acc += abs2(v);
    return acc;
  }

  void require_same_shape(const NVector& o) const {
    if (m_ != o.m_ || n_ != o.n_)
      throw std::invalid_argument("NVector: shape (m, n) mismatch");
  }

 private:
  void check_key(const MultiIndex& I) const {
    if (I.m() != m_ || I.grade() != n_)
      throw std::invalid_argument("NVector: key has wrong dimension or grade");
  }

  int m_, n_;
  Map coeffs_;
};

/// <u|v> = sum_I conj(u_I) v_I; conjugate-linear in the first argument.
/// The basis {e_I} is orthonormal by convention.
template <class S>
S inner_product(const NVector<S>& u, const NVector<S>& v) {
  u.require_same_shape(v);
  S acc(0);
  for (const auto& [I, uv] : u.coeffs()) {
    auto it = v.coeffs().find(I);
    if (it != v.coeffs().end()) acc += conj_of(uv) * it->second;
  }
  return acc;
}

/// Exterior product, grade k + l; bilinear extension of
/// e_I ^ e_J = merge_sign(I, J) e_{I cup J}.
template <class S>
NVector<S> wedge_product(const NVector<S>& u, const NVector<S>& v) {
  if (u.m() != v.m()) throw std::invalid_argument("wedge_product: m mismatch");
  if (u.n() + v.n() > u.m())
    throw std::invalid_argument("wedge_product: grade overflow");
  NVector<S> out(u.m(), u.n() + v.n());
  for (const auto& [I, a] : u.coeffs())
    for (const auto& [J, b] : v.coeffs()) {
      int sign = merge_sign(I.indices(), J.indices());
      if (sign == 0) continue;
      std::vector<int> merged = I.indices();
      merged.insert(merged.end(), J.indices().begin(), J.indices().end());
      sort_sign(merged);
      S term = a * b;
      if (sign < 0) term = -term;
      out.add_to(MultiIndex(u.m(), std::move(merged)), term);
    }
  return out;
}

/// Interior product (contraction) of psi of grade N by phi of grade k <= N.
/// This is the unique grade-(N-k) vector eta with <eta|xi> = <psi|xi ^ phi>
/// for every xi; it is conjugate-linear in phi. On the orthonormal basis:
/// eta_J = sum_{K disjoint from J} conj(phi_K) merge_sign(J, K) psi_{J cup K}.
template <class S>
NVector<S> interior_product(const NVector<S>& psi, const NVector<S>& phi) {
  if (psi.m() != phi.m())
    throw std::invalid_argument("interior_product: m mismatch");
  if (phi.n() > psi.n())
    throw std::invalid_argument("interior_product: contraction grade exceeds "
                                "operand grade");
  NVector<S> out(psi.m(), psi.n() - phi.n());
  for (const auto& [I, p] : psi.coeffs())
    for (const auto& [K, f] : phi.coeffs()) {
      // J = I \ K, nonzero only when K is contained in I.
      std::vector<int> j;
      j.reserve(psi.n() - phi.n());
      bool subset = true;
      for (int v : I.indices())
        if (!K.contains(v)) j.push_back(v);
      subset = (static_cast<int>(j.size()) == psi.n() - phi.n());
      if (!subset) continue;
      int sign = merge_sign(j, K.indices());
      S term = conj_of(f) * p;
      if (sign < 0) term = -term;
      out.add_to(MultiIndex(psi.m(), std::move(j)), term);
    }
  return out;
}

/// Hodge dual: the conjugate-linear map with
/// star e_I = merge_sign(I, I^c) e_{I^c}. Sends grade N to grade M-N and
/// decomposable vectors to decomposable vectors whose support is the
/// orthogonal complement of the original support.
template <class S>
NVector<S> hodge_dual(const NVector<S>& psi) {
  NVector<S> out(psi.m(), psi.m() - psi.n());
  for (const auto& [I, v] : psi.coeffs()) {
    MultiIndex comp = I.complement();
    int sign = merge_sign(I.indices(), comp.indices());
    S term = conj_of(v);
    if (sign < 0) term = -term;
    out.set(comp, term);
  }
  return out;
}

/// Lossy conversion to the floating backend.
inline NVector<Cx> to_float(const NVector<RatC>& v) {
  NVector<Cx> out(v.m(), v.n());
  for (const auto& [I, s] : v.coeffs()) out.set(I, s.to_complex());
  return out;
}
inline const NVector<Cx>& to_float(const NVector<Cx>& v) { return v; }

}  // namespace fupb
