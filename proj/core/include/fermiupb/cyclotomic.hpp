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

#include <gmpxx.h>

namespace fupb {

namespace poly {

using Poly = std::vector<mpq_class>;  // coefficients, lowest degree first

inline void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline Poly add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

/// Euclidean division a = q*b + r over Q[x].
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  if (b.empty()) throw std::domain_error("poly divmod: division by zero");
  Poly q;
  while (a.size() >= b.size()) {
    mpq_class factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    if (q.size() < shift + 1) q.resize(shift + 1, 0);
    q[shift] += factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
    if (!a.empty() && a.size() >= b.size() + shift + 1)
      throw std::logic_error("poly divmod: no progress");
  }
  trim(q);
  return {q, a};
}

/// k-th cyclotomic polynomial, by dividing x^k - 1 by the Phi_d for proper
/// divisors d of k.
inline Poly cyclotomic(int k) {
  Poly num(k + 1, 0);
  num[0] = -1;
  num[k] = 1;
  for (int d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    num = divmod(num, cyclotomic(d)).first;
  }
  return num;
}

}  // namespace poly

/// An element of the cyclotomic field Q(zeta_k), stored as a polynomial in
/// zeta_k reduced modulo the k-th cyclotomic polynomial. Conductor 0 denotes
/// a plain rational constant, compatible with every conductor. Exact complex
/// arithmetic for roots of unity; used to certify constructions whose
/// entries are powers of zeta_k.
class CycloRat {
 public:
  CycloRat() : k_(0) {}
  CycloRat(long v) : k_(0) {  // NOLINT(google-explicit-constructor)
    if (v != 0) c_ = {mpq_class(v)};
  }
  explicit CycloRat(const mpq_class& v) : k_(0) {
    if (sgn(v) != 0) c_ = {v};
  }

  /// zeta_k^power.
  static CycloRat zeta(int k, long power) {
    if (k <= 0) throw std::invalid_argument("CycloRat: conductor must be > 0");
    CycloRat z;
    z.k_ = k;
    long e = ((power % k) + k) % k;
    poly::Poly raw(static_cast<std::size_t>(e) + 1, 0);
    raw[e] = 1;
    z.c_ = reduce(k, std::move(raw));
    z.demote();
    return z;
  }

  int conductor() const { return k_; }
  bool is_zero() const { return c_.empty(); }

  /// Complex conjugation: the automorphism zeta -> zeta^{k-1}.
  CycloRat conj() const {
    if (k_ == 0) return *this;
    poly::Poly raw(static_cast<std::size_t>(k_), 0);
    for (std::size_t j = 0; j < c_.size(); ++j)
      raw[(j * static_cast<std::size_t>(k_ - 1)) % k_] += c_[j];
    CycloRat out;
    out.k_ = k_;
    out.c_ = reduce(k_, std::move(raw));
    out.demote();
    return out;
  }

  CycloRat operator-() const {
    CycloRat out(*this);
    for (auto& x : out.c_) x = -x;
    return out;
  }

  friend CycloRat operator+(const CycloRat& a, const CycloRat& b) {
    auto [x, y, k] = promote(a, b);
    return make(k, poly::add(std::move(x), y));
  }
  friend CycloRat operator-(const CycloRat& a, const CycloRat& b) {
    auto [x, y, k] = promote(a, b);
    return make(k, poly::sub(std::move(x), y));
  }
  friend CycloRat operator*(const CycloRat& a, const CycloRat& b) {
    auto [x, y, k] = promote(a, b);
    poly::Poly prod = poly::mul(x, y);
    return make(k, k == 0 ? std::move(prod) : reduce(k, std::move(prod)));
  }
  friend CycloRat operator/(const CycloRat& a, const CycloRat& b) {
    return a * b.inverse();
  }
  CycloRat& operator+=(const CycloRat& o) { return *this = *this + o; }
  CycloRat& operator-=(const CycloRat& o) { return *this = *this - o; }
  CycloRat& operator*=(const CycloRat& o) { return *this = *this * o; }
  CycloRat& operator/=(const CycloRat& o) { return *this = *this / o; }
  friend bool operator==(const CycloRat& a, const CycloRat& b) {
    return (a - b).is_zero();
  }

  /// Multiplicative inverse by the extended Euclidean algorithm against the
  /// (irreducible) cyclotomic polynomial.
  CycloRat inverse() const {
    if (is_zero()) throw std::domain_error("CycloRat: division by zero");
    if (k_ == 0) {
      CycloRat out;
      out.c_ = {1 / c_[0]};
      return out;
    }
    poly::Poly r0 = poly::cyclotomic(k_), r1 = c_;
    poly::Poly s0 = {}, s1 = {mpq_class(1)};
    while (!r1.empty()) {
      auto [q, r2] = poly::divmod(r0, r1);
      poly::Poly s2 = poly::sub(s0, poly::mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 = gcd = nonzero constant (Phi_k irreducible, deg c_ < deg Phi_k)
    if (r0.size() != 1)
      throw std::logic_error("CycloRat: inverse of a non-unit");
    for (auto& x : s0) x /= r0[0];
    CycloRat out;
    out.k_ = k_;
    out.c_ = std::move(s0);
    out.demote();
    return out;
  }

 private:
  static poly::Poly reduce(int k, poly::Poly raw) {
    // First apply zeta^k = 1, then take the remainder mod Phi_k.
    poly::Poly folded(static_cast<std::size_t>(k), 0);
    for (std::size_t j = 0; j < raw.size(); ++j) folded[j % k] += raw[j];
    poly::trim(folded);
    return poly::divmod(std::move(folded), poly::cyclotomic(k)).second;
  }

  static CycloRat make(int k, poly::Poly c) {
    CycloRat out;
    out.k_ = k;
    out.c_ = std::move(c);
    out.demote();
    return out;
  }

  // A constant needs no conductor; dropping it keeps mixed-conductor
  // arithmetic with plain rationals legal.
  void demote() {
    poly::trim(c_);
    if (c_.size() <= 1) k_ = 0;
  }

  static std::tuple<poly::Poly, poly::Poly, int> promote(const CycloRat& a,
                                                         const CycloRat& b) {
    if (a.k_ != 0 && b.k_ != 0 && a.k_ != b.k_)
      throw std::invalid_argument("CycloRat: mixed conductors");
    return {a.c_, b.c_, a.k_ != 0 ? a.k_ : b.k_};
  }

  int k_;         // conductor (0 = rational constant)
  poly::Poly c_;  // canonical representative, degree < deg Phi_k
};

inline bool scalar_is_zero(const CycloRat& z) { return z.is_zero(); }
inline CycloRat conj_of(const CycloRat& z) { return z.conj(); }

}  // namespace fupb
