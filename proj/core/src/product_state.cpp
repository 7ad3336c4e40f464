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
#include "fermiupb/product_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fermiupb/rng.hpp"

namespace fupb {

VectorXcd tensor_coords(const Vec<Cx>& x, const Vec<Cx>& y) {
  VectorXcd out(static_cast<Eigen::Index>(x.size() * y.size()));
  Eigen::Index p = 0;
  for (const Cx& a : x)
    for (const Cx& b : y) out[p++] = a * b;
  return out;
}

Cx product_overlap(const std::vector<Vec<Cx>>& a,
                   const std::vector<Vec<Cx>>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("product_overlap: party count mismatch");
  Cx acc(1.0, 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) acc *= vec_inner(a[k], b[k]);
  return acc;
}

double product_set_max_overlap(const ProductSet& s) {
  double mx = 0;
  for (std::size_t i = 0; i < s.members.size(); ++i)
    for (std::size_t j = i + 1; j < s.members.size(); ++j)
      mx = std::max(mx, std::abs(product_overlap(s.members[i], s.members[j])));
  return mx;
}

ProductSet pentagon_upb() {
  const double h = std::sqrt(std::cos(std::numbers::pi / 5.0));
  std::vector<Vec<Cx>> v;
  for (int j = 0; j < 5; ++j) {
    double a = 2.0 * std::numbers::pi * j / 5.0;
    Vec<Cx> x = {std::cos(a), std::sin(a), h};
    double nrm = std::sqrt(1.0 + h * h);
    for (Cx& e : x) e /= nrm;
    v.push_back(std::move(x));
  }
  ProductSet out;
  out.dims = {3, 3};
  for (int j = 0; j < 5; ++j) out.members.push_back({v[j], v[(2 * j) % 5]});
  return out;
}

namespace {

MatrixXcd random_unitary(int d, SplitMix& rng) {
  MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.next_complex_normal();
  Eigen::HouseholderQR<MatrixXcd> qr(g);
  MatrixXcd q = qr.householderQ();
  MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    Cx ph = r(j, j) / std::abs(r(j, j));
    q.col(j) *= ph;
  }
  return q;
}

bool blocks_share_column(const std::vector<MatrixXcd>& blocks) {
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a + 1; b < blocks.size(); ++b)
      for (int i = 0; i < blocks[a].cols(); ++i)
        for (int j = 0; j < blocks[b].cols(); ++j)
          if (std::abs(blocks[a].col(i).dot(blocks[b].col(j))) > 1.0 - 1e-6)
            return true;
  return false;
}

}  // namespace

ProductSet block_unitary_upb(const std::vector<int>& dims,
                             std::uint64_t seed) {
  for (int d : dims)
    if (d < 1)
      throw std::invalid_argument("block_unitary_upb: dimensions must be >= 1");
  const int parties = static_cast<int>(dims.size());

  // One list of unitary blocks per party; party k has prod_{r<k} d_r blocks.
  std::vector<std::vector<MatrixXcd>> blocks(parties);
  std::int64_t count = 1;
  for (int k = 0; k < parties; ++k) {
    for (int attempt = 0;; ++attempt) {
      SplitMix rng(seed, static_cast<std::uint64_t>(k) * 7919 + attempt);
      blocks[k].clear();
      for (std::int64_t b = 0; b < count; ++b)
        blocks[k].push_back(random_unitary(dims[k], rng));
      if (!blocks_share_column(blocks[k])) break;
      if (attempt > 64)
        throw std::runtime_error("block_unitary_upb: could not sample "
                                 "distinct-column blocks");
    }
    count *= dims[k];
  }

  ProductSet out;
  out.dims = dims;
  std::vector<int> idx(parties, 0);
  for (std::int64_t member = 0; member < count; ++member) {
    std::vector<Vec<Cx>> tuple;
    std::int64_t prefix = 0;  // mixed-radix rank of (i_1..i_{k-1})
    for (int k = 0; k < parties; ++k) {
      const MatrixXcd& u = blocks[k][prefix];
      Vec<Cx> v(dims[k]);
      for (int r = 0; r < dims[k]; ++r) v[r] = u(r, idx[k]);
      tuple.push_back(std::move(v));
      prefix = prefix * dims[k] + idx[k];
    }
    out.members.push_back(std::move(tuple));
    for (int k = parties - 1; k >= 0; --k) {
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

}  // namespace fupb
