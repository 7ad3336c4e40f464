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
#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace fupb {

/// Floating scalar backend: IEEE binary64 complex.
using Cx = std::complex<double>;

/// Default relative threshold below which a floating value counts as zero.
inline constexpr double kZeroTol = 1e-10;

/// Exact scalar backend: complex numbers with rational real and imaginary
/// parts. Closed under +, -, *, / and conjugation; no rounding ever.
class RatC {
 public:
  RatC() : re_(0), im_(0) {}
  RatC(long re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)
  RatC(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// Parse from "p/q" (or plain integer) strings.
  static RatC from_strings(const std::string& re, const std::string& im) {
    mpq_class r, i;
    if (r.set_str(re, 10) != 0 || i.set_str(im, 10) != 0)
      throw std::invalid_argument("RatC: bad rational literal");
    return RatC(r, i);
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  RatC conj() const { return RatC(re_, -im_); }

  /// |z|^2 as an exact rational.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  Cx to_complex() const { return {re_.get_d(), im_.get_d()}; }

  std::string re_str() const { return re_.get_str(); }
  std::string im_str() const { return im_.get_str(); }

  RatC operator-() const { return RatC(-re_, -im_); }

  RatC& operator+=(const RatC& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  RatC& operator-=(const RatC& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  RatC& operator*=(const RatC& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    return *this;
  }
  RatC& operator/=(const RatC& o) {
    mpq_class n2 = o.norm2();
    if (sgn(n2) == 0) throw std::domain_error("RatC: division by zero");
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n2;
    im_ = (im_ * o.re_ - re_ * o.im_) / n2;
    re_ = r;
    return *this;
  }

  friend RatC operator+(RatC a, const RatC& b) { return a += b; }
  friend RatC operator-(RatC a, const RatC& b) { return a -= b; }
  friend RatC operator*(RatC a, const RatC& b) { return a *= b; }
  friend RatC operator/(RatC a, const RatC& b) { return a /= b; }
  friend bool operator==(const RatC& a, const RatC& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const RatC& a, const RatC& b) { return !(a == b); }

 private:
  mpq_class re_, im_;
};

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, RatC>;

inline Cx conj_of(const Cx& z) { return std::conj(z); }
inline RatC conj_of(const RatC& z) { return z.conj(); }

inline double abs2(const Cx& z) { return std::norm(z); }
inline mpq_class abs2(const RatC& z) { return z.norm2(); }

inline bool scalar_is_zero(const Cx& z) { return z == Cx(0.0, 0.0); }
inline bool scalar_is_zero(const RatC& z) { return z.is_zero(); }

inline Cx to_complex(const Cx& z) { return z; }
inline Cx to_complex(const RatC& z) { return z.to_complex(); }

/// Construction helper: floating structures must never absorb NaN/Inf.
inline Cx checked(Cx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("non-finite complex value");
  return z;
}
inline const RatC& checked(const RatC& z) { return z; }

}  // namespace fupb
