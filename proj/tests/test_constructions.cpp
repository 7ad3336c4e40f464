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
#include <doctest.h>

#include <fermiupb/bounds.hpp>
#include <fermiupb/constructions.hpp>
#include <fermiupb/plucker.hpp>
#include <fermiupb/support.hpp>
#include <fermiupb/verify.hpp>

#include "test_helpers.hpp"

using namespace fupb;

TEST_CASE("slater basis: cardinalities and exact orthogonality") {
  auto s23 = slater_basis(2, 3);
  CHECK(s23.size() == 3);
  auto s24 = slater_basis(2, 4);
  CHECK(s24.size() == 6);
  CHECK(check_orthogonality(s24) == 0.0);
  CHECK(s24.kind == "trivial");
  CHECK_THROWS_AS(slater_basis(4, 3), std::invalid_argument);
}

TEST_CASE("vandermonde gfupb: members, rank, exact entangled complement") {
  auto v = vandermonde_gfupb(2, 4);
  REQUIRE(v.size() == 5);
  CHECK_FALSE(v.claims_orthogonal);

  // member t = 1 has factors (1,1,1,1) and (1,2,4,8)
  const auto& first = v.members.front();
  for (int p = 0; p < 4; ++p) CHECK(first.factors[0][p] == RatC(1));
  CHECK(first.factors[1][0] == RatC(1));
  CHECK(first.factors[1][1] == RatC(2));
  CHECK(first.factors[1][2] == RatC(4));
  CHECK(first.factors[1][3] == RatC(8));

  // not an orthogonal set
  CHECK(check_orthogonality(v) > 1e-2);

  // exact rank 5, complement dim 1
  CHECK(check_independence(v) == 5);
  std::vector<NVector<RatC>> exp;
  for (const auto& f : v.members) exp.push_back(wedge_expand(f));
  Subspace<RatC> span(4, 2, exp);
  Subspace<RatC> comp = span.orthogonal_complement();
  REQUIRE(comp.dim() == 1);

  // the complement generator is proportional to (1, 0, -1, 3, 0, 0) in the
  // lex basis (12, 13, 14, 23, 24, 34), and g ^ g != 0 exactly
  NVector<RatC> g = comp.reduced_basis()[0];
  RatC scale = g.coeff(MultiIndex(4, {1, 2}));
  CHECK_FALSE(scale.is_zero());
  NVector<RatC> frozen(4, 2);
  frozen.set(MultiIndex(4, {1, 2}), RatC(1));
  frozen.set(MultiIndex(4, {1, 4}), RatC(-1));
  frozen.set(MultiIndex(4, {2, 3}), RatC(3));
  CHECK(g == frozen * scale);
  CHECK_FALSE(wedge_product(g, g).is_zero());
  // relation value Q(g) = g12 g34 - g13 g24 + g14 g23 = -3 on the frozen
  // normalization
  auto at = [&](int i, int j) { return frozen.coeff(MultiIndex(4, {i, j})); };
  RatC q = at(1, 2) * at(3, 4) - at(1, 3) * at(2, 4) + at(1, 4) * at(2, 3);
  CHECK(q == RatC(-3));

  // (3,5): 7 members, exact rank 7
  auto v35 = vandermonde_gfupb(3, 5);
  CHECK(v35.size() == 7);
  CHECK(check_independence(v35) == 7);

  CHECK_THROWS_AS(vandermonde_gfupb(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(vandermonde_gfupb(2, 3), std::invalid_argument);
}

TEST_CASE("delta polynomials: frozen expansions, degrees, positivity") {
  // N=2, p=(1,2): the constant polynomial 1
  auto d12 = delta_polynomial(2, 4, {1, 2});
  REQUIRE(d12.coeffs.size() == 1);
  CHECK(d12.coeffs[0] == 1);
  CHECK(d12.degree() == 0);

  // N=2, p=(3,4): t^2 (t+1)^2 = t^4 + 2t^3 + t^2, degree 3+4-2-1 = 4
  auto d34 = delta_polynomial(2, 4, {3, 4});
  CHECK(d34.degree() == 4);
  REQUIRE(d34.coeffs.size() == 5);
  CHECK(d34.coeffs[0] == 0);
  CHECK(d34.coeffs[1] == 0);
  CHECK(d34.coeffs[2] == 1);
  CHECK(d34.coeffs[3] == 2);
  CHECK(d34.coeffs[4] == 1);
  CHECK(d34.vandermonde_value == 1);

  // N=3, p=(3,4,5): quotient t^6+6t^5+13t^4+12t^3+4t^2 (frozen from the
  // symbolic expansion), all coefficients non-negative
  auto d345 = delta_polynomial(3, 5, {3, 4, 5});
  CHECK(d345.degree() == 3 + 4 + 5 - 3 - 3);
  CHECK(d345.vandermonde_value == 2);
  std::vector<long> expect = {0, 0, 4, 12, 13, 6, 1};
  REQUIRE(d345.quotient_coeffs.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i)
    CHECK(d345.quotient_coeffs[i] == expect[i]);

  // degree equality and non-negative quotients across whole index families
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}})
    for (const MultiIndex& p : all_multi_indices(m, n)) {
      auto d = delta_polynomial(n, m, p.indices());
      int expect_deg = -n - n * (n - 1) / 2;
      for (int v : p.indices()) expect_deg += v;
      CHECK(d.degree() == expect_deg);
      for (const mpz_class& c : d.quotient_coeffs) CHECK(c >= 0);
    }

  CHECK_THROWS_AS(delta_polynomial(2, 4, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(delta_polynomial(2, 4, {1, 5}), std::invalid_argument);
}

TEST_CASE("vandermonde complement: the Binet-Cauchy polynomial vanishes") {
  // g(t) = sum_p P_p Delta_p(t) must be the zero polynomial for any vector
  // of the complement, checked exactly for (2,4) and (2,5).
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}}) {
    auto v = vandermonde_gfupb(n, m);
    std::vector<NVector<RatC>> exp;
    for (const auto& f : v.members) exp.push_back(wedge_expand(f));
    Subspace<RatC> comp = Subspace<RatC>(m, n, exp).orthogonal_complement();
    REQUIRE(comp.dim() >= 1);
    for (const NVector<RatC>& g : comp.reduced_basis()) {
      std::vector<mpq_class> total;
      for (const MultiIndex& p : all_multi_indices(m, n)) {
        RatC coeff = g.coeff(p);
        CHECK(coeff.im() == 0);  // integer construction: real complement
        if (coeff.is_zero()) continue;
        auto d = delta_polynomial(n, m, p.indices());
        if (total.size() < d.coeffs.size()) total.resize(d.coeffs.size(), 0);
        for (std::size_t i = 0; i < d.coeffs.size(); ++i)
          total[i] += coeff.re() * mpq_class(d.coeffs[i]);
      }
      for (const mpq_class& c : total) CHECK(sgn(c) == 0);
    }
  }
}

TEST_CASE("c4 double-root solve: reference regression and invariants") {
  C4Params p = solve_c4_double_root(2.0, Cx(1.13631, -0.197693));
  // Six-digit reference values, 1e-4 agreement
  CHECK(std::abs(p.c - Cx(-0.829747, 0.0716405)) <= 1e-4);
  CHECK(std::abs(p.d - Cx(1.13631, -0.197693)) <= 1e-4);
  CHECK(p.discriminant_mag <= 1e-10);

  // tighter frozen values from the solve itself (12 digits)
  CHECK(std::abs(p.c - Cx(-0.829747078943, 0.071640496155)) <= 1e-9);
  CHECK(std::abs(p.d - Cx(1.136312815799, -0.197692586062)) <= 1e-9);

  auto s = fupb_c4(p);
  REQUIRE(s.size() == 5);
  CHECK(check_orthogonality(s) <= 1e-10);
  // psi_1 = e_{1,2} exactly
  NVector<Cx> first = wedge_expand(s.members[0]);
  CHECK(first.coeff(MultiIndex(4, {1, 2})) == Cx(1.0));
  CHECK(first.coeffs().size() == 1);

  // the complement generator is entangled with margin
  std::vector<NVector<Cx>> exp;
  for (const auto& f : s.members) exp.push_back(wedge_expand(f));
  Subspace<Cx> comp = Subspace<Cx>(4, 2, exp).orthogonal_complement();
  REQUIRE(comp.dim() == 1);
  NVector<Cx> g = comp.ortho_vector(0);
  CHECK(std::sqrt(wedge_product(g, g).norm2()) / g.norm2() >= 1e-3);

  // six-digit reference parameters still build a set, orthogonal to 1e-4
  C4Params ref;
  ref.b = 2.0;
  ref.c = Cx(-0.829747, 0.0716405);
  ref.d = Cx(1.13631, -0.197693);
  auto sp = fupb_c4(ref);
  CHECK(check_orthogonality(sp) <= 1e-4);

  // garbage parameters are rejected
  C4Params bad;
  bad.b = 2.0;
  bad.c = Cx(1.0, 1.0);
  bad.d = Cx(-0.3, 0.4);
  CHECK_THROWS_AS(fupb_c4(bad), std::invalid_argument);
  CHECK_THROWS_AS(solve_c4_double_root(-1.0, Cx(1.0)), std::invalid_argument);
}

TEST_CASE("c4 double root semantics: dropping psi_4 leaves it as the only "
          "decomposable extension") {
  // With the double root in force, the unique decomposable vector orthogonal
  // to {psi_1, psi_2, psi_3, psi_5} is psi_4 itself, so the pencil
  // certificate on the 2-dim complement must return a witness parallel to
  // psi_4.
  auto s = fupb_c4(c4_reference_params());
  NVector<Cx> psi4 = wedge_expand(s.members[3]);
  std::vector<NVector<Cx>> four;
  for (int i : {0, 1, 2, 4}) four.push_back(wedge_expand(s.members[i]));
  Subspace<Cx> comp = Subspace<Cx>(4, 2, four).orthogonal_complement();
  REQUIRE(comp.dim() == 2);
  Factorization<Cx> w = certify_pencil_m4(comp);
  NVector<Cx> we = wedge_expand(w);
  double align = std::abs(inner_product(psi4, we)) /
                 std::sqrt(psi4.norm2() * we.norm2());
  CHECK(align >= 1.0 - 1e-6);
}

TEST_CASE("pad and the grade-2 hyperplane construction agree on (2,5)") {
  auto a = pad_fupb(fupb_c4(c4_reference_params()));
  auto b = hyperplane_fupb(2, 5);
  REQUIRE(a.size() == b.size());
  std::vector<NVector<Cx>> ea, eb;
  for (const auto& f : a.members) ea.push_back(wedge_expand(f));
  for (const auto& f : b.members) eb.push_back(wedge_expand(f));
  Subspace<Cx> sa(5, 2, ea), sb(5, 2, eb);
  REQUIRE(sa.dim() == sb.dim());
  MatrixXcd pa = sa.ortho() * sa.ortho().adjoint();
  MatrixXcd pb = sb.ortho() * sb.ortho().adjoint();
  CHECK((pa - pb).norm() <= 1e-10);
}

TEST_CASE("real canonical family: sampling, witness orthogonality") {
  SplitMix rng(41, 0);
  for (int trial = 0; trial < 100; ++trial) {
    RealCanonicalParams p = sample_real_canonical(rng);
    auto s = real_canonical_members(p);
    CHECK(check_orthogonality(s) <= 1e-10);
    Factorization<Cx> wit = real_extension_witness(p);
    NVector<Cx> w = wedge_expand(wit);
    CHECK(plucker_residual(w) <= 1e-10);
    double wn = std::sqrt(w.norm2());
    for (const auto& mem : s.members) {
      double mn = std::sqrt(factorization_norm2(mem));
      CHECK(std::abs(gram_inner_product(mem, wit)) / (mn * wn) <= 1e-10);
    }
  }
  // zero parameters rejected
  RealCanonicalParams bad{0.0, 1, 1, 1, 1, 1, 1};
  CHECK_THROWS_AS(real_extension_witness(bad), std::invalid_argument);
}

TEST_CASE("pad: cardinality and preserved orthogonality") {
  auto c4 = fupb_c4(c4_reference_params());
  auto p5 = pad_fupb(c4);
  CHECK(p5.m == 5);
  CHECK(p5.size() == 9);
  CHECK(check_orthogonality(p5) <= 1e-10);
  auto p6 = pad_fupb(p5);
  CHECK(p6.size() == 14);
  CHECK(check_orthogonality(p6) <= 1e-10);
  auto tri = slater_basis(2, 3);
  CHECK(pad_fupb(tri).size() == 6);
  CHECK_THROWS_AS(pad_fupb(slater_basis(3, 4)), std::invalid_argument);
}

TEST_CASE("pentagon UPB: height, orthogonality, cardinality") {
  ProductSet p = pentagon_upb();
  CHECK(p.members.size() == 5);
  CHECK(p.members.size() ==
        static_cast<std::size_t>(min_upb_cardinality_bipartite(3, 3)));
  CHECK(product_set_max_overlap(p) <= 1e-10);
}

TEST_CASE("block unitary UPB: full orthonormal product bases") {
  auto u22 = block_unitary_upb({2, 2}, 5);
  CHECK(u22.members.size() == 4);
  CHECK(product_set_max_overlap(u22) <= 1e-10);
  for (const auto& mem : u22.members)
    CHECK(std::abs(product_overlap(mem, mem) - Cx(1.0)) <= 1e-10);

  auto u33 = block_unitary_upb({3, 3}, 5);
  CHECK(u33.members.size() == 9);
  CHECK(product_set_max_overlap(u33) <= 1e-10);

  // no two blocks share a column up to phase: party-2 vectors from distinct
  // blocks (distinct first index) never align
  for (std::size_t a = 0; a < u33.members.size(); ++a)
    for (std::size_t b = 0; b < u33.members.size(); ++b) {
      if (a / 3 == b / 3) continue;  // same block
      Cx ip = vec_inner(u33.members[a][1], u33.members[b][1]);
      CHECK(std::abs(ip) < 1.0 - 1e-6);
    }

  auto u333 = block_unitary_upb({3, 3, 3}, 7);
  CHECK(u333.members.size() == 27);
  CHECK(product_set_max_overlap(u333) <= 1e-10);
}

TEST_CASE("compose 3+3+pentagon: eleven members in the six-mode space") {
  auto z = compose_3_3_pentagon();
  CHECK(z.m == 6);
  REQUIRE(z.size() == 11);
  CHECK(check_orthogonality(z) <= 1e-10);
  CHECK(check_independence(z) == 11);
  std::vector<NVector<Cx>> exp;
  for (const auto& f : z.members) exp.push_back(wedge_expand(f));
  CHECK(Subspace<Cx>(6, 2, exp).orthogonal_complement().dim() == 4);
}

TEST_CASE("hyperplane FUPB: cardinalities and orthogonality") {
  auto h35 = hyperplane_fupb(3, 5);
  CHECK(h35.size() == 9);
  CHECK(static_cast<std::int64_t>(h35.size()) == binomial(5, 3) - 1);
  CHECK(check_orthogonality(h35) <= 1e-10);

  auto h24 = hyperplane_fupb(2, 4);
  CHECK(h24.size() == 5);  // degenerate tail: the c4 FUPB itself

  auto h36 = hyperplane_fupb(3, 6);
  CHECK(static_cast<std::int64_t>(h36.size()) == binomial(6, 3) - 1);
  CHECK(check_orthogonality(h36) <= 1e-10);

  CHECK_THROWS_AS(hyperplane_fupb(3, 4), std::invalid_argument);
}

TEST_CASE("hyperplane spanning: members, rank, exact orthogonality to psi") {
  // M=4, k=2: the five members include (|1>-|3>) ^ (|2>+|4>)
  auto s42 = hyperplane_gfupb_spanning(4, 2);
  REQUIRE(s42.size() == 5);
  const auto& twisted = s42.members.back();
  CHECK(twisted.factors[0][0] == Cx(1.0));
  CHECK(std::abs(twisted.factors[0][2] - Cx(-1.0)) <= 1e-12);
  CHECK(twisted.factors[1][1] == Cx(1.0));
  CHECK(twisted.factors[1][3] == Cx(1.0));
  CHECK(check_independence(s42) == 5);

  auto s63 = hyperplane_gfupb_spanning(6, 3);
  CHECK(s63.size() == 14);
  CHECK(check_independence(s63) == 14);

  // every member orthogonal to psi = sum e_{2i-1,2i} (floating view)
  for (auto [m, k] : std::vector<std::pair<int, int>>{{4, 2}, {6, 3}, {8, 2}}) {
    auto s = hyperplane_gfupb_spanning(m, k);
    NVector<Cx> psi(m, 2);
    for (int i = 1; i <= k; ++i)
      psi.set(MultiIndex(m, {2 * i - 1, 2 * i}), Cx(1.0));
    for (const auto& f : s.members)
      CHECK(std::abs(inner_product(psi, wedge_expand(f))) <= 1e-12);
  }

  // exact cyclotomic certificate
  auto c42 = hyperplane_spanning_exact_check(4, 2);
  CHECK(c42.rank == 5);
  CHECK(c42.orthogonal_to_psi);
  auto c63 = hyperplane_spanning_exact_check(6, 3);
  CHECK(c63.rank == 14);
  CHECK(c63.orthogonal_to_psi);
  auto c84 = hyperplane_spanning_exact_check(8, 4);
  CHECK(c84.rank == 27);
  CHECK(c84.orthogonal_to_psi);

  CHECK_THROWS_AS(hyperplane_gfupb_spanning(4, 3), std::invalid_argument);
}

TEST_CASE("codim-3 subspace: dimensions and indecomposable contractions") {
  auto c35 = codim3_not_spanned(3, 5);
  CHECK(c35.l.dim() == binomial(5, 3) - 3);
  CHECK(c35.l0.dim() == binomial(5, 3) - 4);

  // (2,4): phi is the grade-0 unit and the check degenerates to psi + alpha
  auto c24 = codim3_not_spanned(2, 4);
  CHECK(c24.phi.n() == 0);
  CHECK(c24.l.dim() == 3);

  // sampled alpha in L0: the contraction of psi + alpha by phi stays
  // bounded away from the decomposable variety
  SplitMix rng(42, 0);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 4}, {3, 5}}) {
    auto c = codim3_not_spanned(n, m);
    auto l0_basis = c.l0.basis();
    NVector<Cx> psi_f = to_float(c.psi);
    NVector<Cx> phi_f = to_float(c.phi);
    for (int trial = 0; trial < 100; ++trial) {
      NVector<Cx> alpha(m, n);
      for (const auto& b : l0_basis)
        alpha += to_float(b) * rng.next_complex_normal();
      // normalize alpha against psi's scale
      double scale = std::sqrt(alpha.norm2());
      NVector<Cx> probe = psi_f + alpha * Cx(1.0 / scale);
      NVector<Cx> bivec = interior_product(probe, phi_f);
      CHECK(plucker_residual(bivec) >= 1e-6);
    }
  }

  CHECK_THROWS_AS(codim3_not_spanned(3, 4), std::invalid_argument);
}

TEST_CASE("hodge dual transfer: 9-member FUPB of the 3-fermion 5-mode space") {
  auto s1 = pad_fupb(fupb_c4(c4_reference_params()));
  auto d = dual_fupb(s1);
  CHECK(d.m == 5);
  CHECK(d.n == 3);
  REQUIRE(d.size() == 9);
  CHECK(check_orthogonality(d) <= 1e-10);

  // dual of dual spans the same subspace
  auto dd = dual_fupb(d);
  std::vector<NVector<Cx>> e1, e2;
  for (const auto& f : s1.members) e1.push_back(wedge_expand(f));
  for (const auto& f : dd.members) e2.push_back(wedge_expand(f));
  Subspace<Cx> sp1(5, 2, e1), sp2(5, 2, e2);
  REQUIRE(sp1.dim() == sp2.dim());
  const MatrixXcd p1 = sp1.ortho() * sp1.ortho().adjoint();
  const MatrixXcd p2 = sp2.ortho() * sp2.ortho().adjoint();
  CHECK((p1 - p2).norm() <= 1e-10);

  // dual of the trivial FUPB spans everything, exactly
  auto dt = dual_fupb(slater_basis(2, 4));
  CHECK(dt.size() == 6);
  CHECK(check_orthogonality(dt) == 0.0);
  std::vector<NVector<RatC>> et;
  for (const auto& f : dt.members) et.push_back(wedge_expand(f));
  CHECK(Subspace<RatC>(4, 2, et).dim() == 6);
}
