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

#include <cstdint>
#include <vector>

#include "fermiupb/dense.hpp"
#include "fermiupb/factorization.hpp"

namespace fupb {

/// A set of product states in a multipartite tensor space: member i is the
/// product of one vector per party.
struct ProductSet {
  std::vector<int> dims;
  std::vector<std::vector<Vec<Cx>>> members;

  int parties() const { return static_cast<int>(dims.size()); }
  std::int64_t full_dim() const {
    std::int64_t d = 1;
    for (int x : dims) d *= x;
    return d;
  }
};

/// Tensor coordinates of a bipartite product pair, index (i, j) -> i*d2 + j.
VectorXcd tensor_coords(const Vec<Cx>& x, const Vec<Cx>& y);

/// <member_i | member_j> for product states (product of per-party inners).
Cx product_overlap(const std::vector<Vec<Cx>>& a,
                   const std::vector<Vec<Cx>>& b);

/// The five-state pyramid UPB in C^3 (x) C^3: member j is
/// (v_j, v_{2j mod 5}) with v_j built on the unit pentagon at height h,
/// where h^2 = cos(pi/5) solves the adjacency orthogonality
/// <v_j|v_{j+-2}> = 0.
ProductSet pentagon_upb();

/// A full orthonormal product basis (hence a UPB) of an arbitrary
/// multipartite space, built from randomized unitary blocks: the party-k
/// vector of member (i_1,...,i_N) is column i_k of the (i_1,...,i_{k-1})-th
/// unitary block. Blocks are resampled until no two share a column up to
/// phase, so the basis is inequivalent to the computational one.
ProductSet block_unitary_upb(const std::vector<int>& dims,
                             std::uint64_t seed = 0);

/// Largest pairwise |overlap| over distinct members.
double product_set_max_overlap(const ProductSet& s);

}  // namespace fupb
