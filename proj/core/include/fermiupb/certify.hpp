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

#include <optional>

#include "fermiupb/factorization.hpp"
#include "fermiupb/subspace.hpp"

namespace fupb {

/// Outcome of the one-dimensional certificate. Entanglement of a single
/// generator g is decidable: for grade 2 via g ^ g = 0, in general via the
/// Pluecker relations; exact on the exact backend. A floating generator is
/// certified entangled only when the normalized relation magnitude clears
/// 1e3 * tol_found.
enum class Dim1Kind {
  entangled_exact,
  entangled_float,
  decomposable,
  unclear,
};

struct Dim1Certificate {
  Dim1Kind kind;
  double relation_magnitude;  // normalized decomposability residual of g
  std::optional<Factorization<Cx>> witness;  // set when g is decomposable
};

Dim1Certificate certify_dim1(const Subspace<RatC>& t, double tol_found = 1e-10);
Dim1Certificate certify_dim1(const Subspace<Cx>& t, double tol_found = 1e-10);

/// Every 2-dimensional subspace of the two-fermion four-mode space contains
/// a decomposable vector: the single Pluecker quadric restricted to the
/// pencil psi_A + lambda psi_B has a root (or psi_B works at infinity).
/// Returns an explicit decomposable witness inside t.
Factorization<Cx> certify_pencil_m4(const Subspace<Cx>& t);

}  // namespace fupb
