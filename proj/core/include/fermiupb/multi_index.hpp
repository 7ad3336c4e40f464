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
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fupb {

/// Binomial coefficient C(n, k) as a 64-bit integer. Dimensions in this
/// library are single digits, so overflow is not a concern.
inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

/// A strictly increasing k-tuple of indices in [1, m]: the subscript of a
/// basis vector e_{i1,...,ik} of the k-th exterior power of C^m.
class MultiIndex {
 public:
  MultiIndex() : m_(0) {}
  MultiIndex(int m, std::vector<int> indices)
      : m_(m), idx_(std::move(indices)) {
    validate();
  }

  int m() const { return m_; }
  int grade() const { return static_cast<int>(idx_.size()); }
  const std::vector<int>& indices() const { return idx_; }
  int operator[](int pos) const { return idx_[pos]; }

  bool contains(int i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
  }

  /// Position of this tuple in lexicographic order over all grade-k subsets
  /// of [1, m]; a bijection onto [0, C(m, k)).
  std::int64_t rank() const {
    std::int64_t r = 0;
    int prev = 0;
    const int k = grade();
    for (int pos = 0; pos < k; ++pos) {
      for (int v = prev + 1; v < idx_[pos]; ++v)
        r += binomial(m_ - v, k - pos - 1);
      prev = idx_[pos];
    }
    return r;
  }

  /// Inverse of rank().
  static MultiIndex unrank(int m, int k, std::int64_t r) {
    std::vector<int> out;
    out.reserve(k);
    int v = 1;
    for (int pos = 0; pos < k; ++pos) {
      while (true) {
        std::int64_t block = binomial(m - v, k - pos - 1);
        if (r < block) break;
        r -= block;
        ++v;
      }
      out.push_back(v++);
    }
    return MultiIndex(m, std::move(out));
  }

  /// The complementary (m-k)-tuple.
  MultiIndex complement() const {
    std::vector<int> out;
    out.reserve(m_ - grade());
    for (int v = 1; v <= m_; ++v)
      if (!contains(v)) out.push_back(v);
    return MultiIndex(m_, std::move(out));
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.idx_ == b.idx_;
  }
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.idx_ <=> b.idx_;
  }

 private:
  void validate() const {
    int prev = 0;
    for (int i : idx_) {
      if (i <= prev || i > m_)
        throw std::invalid_argument("MultiIndex: indices must be strictly "
                                    "increasing within [1, m]");
      prev = i;
    }
  }

  int m_;
  std::vector<int> idx_;
};

/// Sign of the shuffle merging two disjoint increasing tuples I, J into the
/// sorted tuple I cup J: (-1)^{#{(i,j) in I x J : i > j}}. Returns 0 when the
/// tuples intersect.
inline int merge_sign(const std::vector<int>& a, const std::vector<int>& b) {
  int crossings = 0;
  for (int x : a)
    for (int y : b) {
      if (x == y) return 0;
      if (x > y) ++crossings;
    }
  return (crossings % 2 == 0) ? 1 : -1;
}

/// Sorts `v` in place and returns the sign of the sorting permutation, or 0
/// if `v` has a repeated entry.
inline int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) return 0;
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

/// All grade-k multi-indices of [1, m] in lexicographic order.
inline std::vector<MultiIndex> all_multi_indices(int m, int k) {
  std::vector<MultiIndex> out;
  const std::int64_t total = binomial(m, k);
  out.reserve(total);
  for (std::int64_t r = 0; r < total; ++r)
    out.push_back(MultiIndex::unrank(m, k, r));
  return out;
}

}  // namespace fupb
