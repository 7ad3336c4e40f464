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
#include "fermiupb/certify.hpp"

#include <cmath>

#include "fermiupb/plucker.hpp"
#include "fermiupb/support.hpp"

namespace fupb {

Dim1Certificate certify_dim1(const Subspace<RatC>& t, double /*tol_found*/) {
  // Exact arithmetic needs no tolerance; the parameter keeps the two
  // backends call-compatible.
  if (t.dim() != 1)
    throw std::invalid_argument("certify_dim1: subspace must be 1-dim");
  NVector<RatC> g = t.reduced_basis()[0];
  bool entangled;
  if (g.n() == 2 && g.m() >= 4)
    entangled = !wedge_product(g, g).is_zero();
  else  // covers m <= 3, where every 2-vector is decomposable
    entangled = !is_decomposable_exact(g);
  if (entangled)
    return {Dim1Kind::entangled_exact, plucker_residual(to_float(g)),
            std::nullopt};
  auto fac = factor_decomposable(g);
  return {Dim1Kind::decomposable, 0.0,
          fac ? std::optional<Factorization<Cx>>(to_float(*fac))
              : std::nullopt};
}

Dim1Certificate certify_dim1(const Subspace<Cx>& t, double tol_found) {
  if (t.dim() != 1)
    throw std::invalid_argument("certify_dim1: subspace must be 1-dim");
  NVector<Cx> g = t.ortho_vector(0);
  double res;
  if (g.n() == 2 && g.m() >= 4) {
    // ||g ^ g|| / ||g||^2; vanishes exactly on decomposables.
    NVector<Cx> w = wedge_product(g, g);
    res = std::sqrt(w.norm2()) / g.norm2();
  } else {
    res = plucker_residual(g);
  }
  if (res > 1e3 * tol_found)
    return {Dim1Kind::entangled_float, res, std::nullopt};
  if (res <= tol_found) {
    auto fac = factor_decomposable(g);
    if (fac) return {Dim1Kind::decomposable, res, std::move(fac)};
  }
  return {Dim1Kind::unclear, res, std::nullopt};
}

namespace {

/// The single Pluecker quadric of grade 2, dimension 4, in lexicographic
/// coordinates (12, 13, 14, 23, 24, 34).
Cx quadric(const VectorXcd& p) {
  return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

/// Its polarization: quadric(x + y) = quadric(x) + polar(x, y) + quadric(y).
Cx polar(const VectorXcd& x, const VectorXcd& y) {
  return x[0] * y[5] + y[0] * x[5] - x[1] * y[4] - y[1] * x[4] + x[2] * y[3] +
         y[2] * x[3];
}

}  // namespace

Factorization<Cx> certify_pencil_m4(const Subspace<Cx>& t) {
  if (t.n() != 2 || t.m() != 4 || t.dim() != 2)
    throw std::invalid_argument("certify_pencil_m4: need a 2-dim subspace of "
                                "grade 2, dimension 4");
  VectorXcd pa = t.ortho().col(0), pb = t.ortho().col(1);
  const Cx qa = quadric(pa), qb = quadric(pb), qab = polar(pa, pb);
  const double scale = std::max({std::abs(qa), std::abs(qb), std::abs(qab)});

  // q(lambda) = qa + qab lambda + qb lambda^2 on psi_A + lambda psi_B.
  VectorXcd w;
  if (scale < 1e-14) {
    w = pa;  // the quadric vanishes identically: everything decomposable
  } else if (std::abs(qb) <= 1e-14 * scale) {
    // Degenerate leading coefficient: psi_B itself is the root at infinity,
    // unless the linear part still has a finite root.
    if (std::abs(qab) > 1e-14 * scale)
      w = pa + (-qa / qab) * pb;
    else
      w = pb;
  } else {
    Cx disc = std::sqrt(qab * qab - 4.0 * qa * qb);
    Cx r1 = (-qab + disc) / (2.0 * qb);
    Cx r2 = (-qab - disc) / (2.0 * qb);
    Cx lambda = std::abs(r1) <= std::abs(r2) ? r1 : r2;
    w = pa + lambda * pb;
  }

  auto fac = factor_decomposable(from_dense(4, 2, w / w.norm()), 1e-6);
  if (!fac)
    throw std::logic_error("certify_pencil_m4: quadric root did not factor");
  return *fac;
}

}  // namespace fupb
