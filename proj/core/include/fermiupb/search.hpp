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
#include <optional>
#include <utility>

#include "fermiupb/factorization.hpp"
#include "fermiupb/subspace.hpp"

namespace fupb {

/// Knobs of the multi-start first-order witness search. Per-restart RNG
/// streams are derived from (seed, restart index), so results are
/// reproducible and independent of execution order.
struct SearchConfig {
  int restarts = 200;
  int max_iters = 2000;
  double tol_found = 1e-10;  // residual below which a witness is accepted
  double tol_clear = 1e-6;   // residual above which a full sweep "passes"
  std::uint64_t seed = 0;

  // Step controller: multiplicative growth on accepted steps, backtracking
  // on rejected ones.
  double step_init = 0.2;
  double step_grow = 1.5;
  double step_shrink = 0.5;
  double step_min = 1e-16;

  void validate() const {
    if (restarts < 1 || max_iters < 1)
      throw std::invalid_argument("SearchConfig: restarts and max_iters must "
                                  "be positive");
    if (!(tol_found < tol_clear))
      throw std::invalid_argument("SearchConfig: tol_found < tol_clear "
                                  "required");
  }
};

struct SearchResult {
  double best_residual = 1.0;
  int restarts_used = 0;
  int best_restart = -1;
  bool found = false;
  std::optional<Factorization<Cx>> witness;
};

/// Objective of the decomposable-witness search at factor matrix x (rows are
/// the N factors): f = ||(I - P_T) wedge(x)||^2 / ||wedge(x)||^2, together
/// with its Wirtinger gradient d f / d conj(x). Exposed for the
/// finite-difference cross-check.
std::pair<double, MatrixXcd> search_objective_gradient(const Subspace<Cx>& t,
                                                       const MatrixXcd& x);

/// Multi-start projected gradient descent for a decomposable vector inside
/// the subspace t. Factors are re-orthonormalized every iteration; descent
/// is plain first-order with Armijo backtracking. Deterministic in cfg.seed;
/// stops at the first restart that reaches tol_found.
SearchResult search_decomposable(const Subspace<Cx>& t,
                                 const SearchConfig& cfg);

struct ProductSearchResult {
  double best_residual = 1.0;
  int restarts_used = 0;
  bool found = false;
  std::optional<std::pair<Vec<Cx>, Vec<Cx>>> witness;
};

/// Bipartite tensor analogue: searches for a product vector x (x) y inside
/// the column span of t_ortho (an orthonormal basis of a subspace of
/// C^{d1 d2}).
ProductSearchResult search_product_pair(int d1, int d2,
                                        const MatrixXcd& t_ortho,
                                        const SearchConfig& cfg);

}  // namespace fupb
