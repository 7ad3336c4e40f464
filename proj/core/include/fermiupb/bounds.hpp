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
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fermiupb/multi_index.hpp"

namespace fupb {

inline void check_grade_domain(int n, int m) {
  if (n < 1 || n > m)
    throw std::invalid_argument("bounds: need 1 <= N <= M");
}

/// Maximum dimension of a completely entangled subspace of the N-fermion
/// space: C(M,N) - N(M-N) - 1. The decomposable vectors form a projective
/// variety of dimension N(M-N), and a generic linear space of the
/// complementary dimension misses it.
inline std::int64_t ces_max_dim(int n, int m) {
  check_grade_domain(n, m);
  return binomial(m, n) - static_cast<std::int64_t>(n) * (m - n) - 1;
}

/// Smallest possible cardinality of a generalized FUPB: N(M-N) + 1.
inline std::int64_t gfupb_min_cardinality(int n, int m) {
  check_grade_domain(n, m);
  return static_cast<std::int64_t>(n) * (m - n) + 1;
}

struct TensorBounds {
  std::int64_t l_n;                 // minimum generalized-UPB cardinality
  std::int64_t d_n;                 // full dimension prod d_i
  std::int64_t f_m;                 // minimum UPB cardinality, 2 parties only
  bool has_f_m;
};

/// Minimum UPB cardinality for two parties.
inline std::int64_t min_upb_cardinality_bipartite(std::int64_t d1,
                                                  std::int64_t d2) {
  if (d1 < 1 || d2 < 1)
    throw std::invalid_argument("tensor bounds: dimensions must be >= 1");
  if (std::min(d1, d2) == 2) return d1 * d2;
  if (d1 >= 4 && d2 >= 4 && d1 % 2 == 0 && d2 % 2 == 0) return d1 + d2;
  return d1 + d2 - 1;
}

inline TensorBounds tensor_upb_bounds(const std::vector<std::int64_t>& dims) {
  if (dims.empty())
    throw std::invalid_argument("tensor bounds: need at least one party");
  TensorBounds b{};
  b.l_n = 1 - static_cast<std::int64_t>(dims.size());
  b.d_n = 1;
  for (std::int64_t d : dims) {
    if (d < 1)
      throw std::invalid_argument("tensor bounds: dimensions must be >= 1");
    b.l_n += d;
    b.d_n *= d;
  }
  b.has_f_m = (dims.size() == 2);
  // The minimum UPB size for three or more parties is open; only the
  // bipartite table is exposed.
  b.f_m = b.has_f_m ? min_upb_cardinality_bipartite(dims[0], dims[1]) : -1;
  return b;
}

}  // namespace fupb
