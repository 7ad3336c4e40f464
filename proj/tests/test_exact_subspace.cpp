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

#include <fermiupb/cyclotomic.hpp>
#include <fermiupb/linalg.hpp>
#include <fermiupb/subspace.hpp>

#include "test_helpers.hpp"

using namespace fupb;

TEST_CASE("rational-complex scalar arithmetic is exact and closed") {
  RatC a = RatC::from_strings("1/3", "-2/7");
  RatC b = RatC::from_strings("5", "1/2");
  CHECK((a + b) - b == a);
  CHECK((a * b) / b == a);
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).im() == 0);
  CHECK(a.norm2() == mpq_class(1, 9) + mpq_class(4, 49));
  CHECK(RatC(0).is_zero());
  CHECK_THROWS_AS(a / RatC(0), std::domain_error);
  CHECK(a.re_str() == "1/3");
  CHECK(a.im_str() == "-2/7");
}

TEST_CASE("floating scalars reject NaN and infinity at construction") {
  NVector<Cx> v(4, 2);
  CHECK_THROWS_AS(
      v.set(MultiIndex(4, {1, 2}), Cx(std::nan(""), 0.0)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      v.set(MultiIndex(4, {1, 2}), Cx(0.0, std::numeric_limits<double>::infinity())),
      std::invalid_argument);
}

TEST_CASE("cyclotomic field: roots of unity behave exactly") {
  // 1 + zeta_3 + zeta_3^2 = 0
  CycloRat z = CycloRat::zeta(3, 1);
  CHECK((CycloRat(1) + z + z * z).is_zero());
  CHECK(CycloRat::zeta(3, 3) == CycloRat(1));
  // conjugation is inversion on the unit circle
  CHECK(z.conj() == CycloRat::zeta(3, 2));
  CHECK((z * z.conj()) == CycloRat(1));
  // field inverse
  CycloRat w = CycloRat(2) + z;
  CHECK(w * w.inverse() == CycloRat(1));
  // zeta_2 = -1 collapses to a rational
  CHECK(CycloRat::zeta(2, 1) == CycloRat(-1));
  CHECK(CycloRat::zeta(2, 1).conductor() == 0);
  // mixed conductors are rejected
  CHECK_THROWS_AS(CycloRat::zeta(3, 1) + CycloRat::zeta(4, 1),
                  std::invalid_argument);
  // DFT-style rank over Q(zeta_3): rows (zeta^{jl})_l for j = 1, 2
  FieldMatrix<CycloRat> rows(2, std::vector<CycloRat>(3));
  for (int j = 1; j <= 2; ++j)
    for (int l = 0; l < 3; ++l)
      rows[j - 1][l] = CycloRat::zeta(3, static_cast<long>(j) * l);
  CHECK(field_rank(rows) == 2);
}

TEST_CASE("exact field elimination: rank, nullspace, solve") {
  FieldMatrix<RatC> a = {
      {RatC(1), RatC(2), RatC(3)},
      {RatC(2), RatC(4), RatC(6)},
      {RatC(0), RatC(1), RatC(1)},
  };
  CHECK(field_rank(a) == 2);
  auto ns = field_nullspace(a);
  REQUIRE(ns.size() == 1);
  // the null vector satisfies a x = 0 exactly
  for (const auto& row : a) {
    RatC acc(0);
    for (int i = 0; i < 3; ++i) acc += row[i] * ns[0][i];
    CHECK(acc.is_zero());
  }
  FieldMatrix<RatC> sq = {{RatC(2), RatC(1)}, {RatC(1), RatC(3)}};
  auto x = field_solve(sq, {RatC(5), RatC(5)});
  CHECK(x[0] == RatC(2));
  CHECK(x[1] == RatC(1));
  CHECK(field_det(sq) == RatC(5));
}

TEST_CASE("subspace: spans, projections, complements on both backends") {
  // span{e_{1,2}} in the grade-2 four-mode space: dim 1, complement dim 5
  {
    Subspace<RatC> s(4, 2, {NVector<RatC>::basis(4, {1, 2})});
    CHECK(s.dim() == 1);
    Subspace<RatC> c = s.orthogonal_complement();
    CHECK(c.dim() == 5);
    // projection is exact: v in span projects to itself
    NVector<RatC> v = NVector<RatC>::basis(4, {1, 2}) * RatC(mpq_class(3, 7), mpq_class(1, 2));
    CHECK(s.project(v) == v);
    CHECK(s.contains(v));
    CHECK_FALSE(s.contains(NVector<RatC>::basis(4, {1, 3})));
  }
  {
    Subspace<Cx> s(4, 2, {to_float(NVector<RatC>::basis(4, {1, 2}))});
    CHECK(s.dim() == 1);
    CHECK(s.orthogonal_complement().dim() == 5);
  }

  // projection idempotence and complement orthogonality, floating
  SplitMix rng(31, 0);
  std::vector<NVector<Cx>> gen;
  for (int i = 0; i < 3; ++i)
    gen.push_back(fupb::test::random_nvector(5, 2, rng));
  Subspace<Cx> s(5, 2, gen);
  CHECK(s.dim() == 3);
  Subspace<Cx> c = s.orthogonal_complement();
  CHECK(s.dim() + c.dim() == binomial(5, 2));
  NVector<Cx> v = fupb::test::random_nvector(5, 2, rng);
  NVector<Cx> p = s.project(v);
  CHECK(std::sqrt((s.project(p) - p).norm2()) <= 1e-10 * std::sqrt(p.norm2()));
  for (int i = 0; i < c.dim(); ++i)
    CHECK(std::abs(inner_product(c.ortho_vector(i), p)) <= 1e-10);

  // exact complement: dims add up, orthogonality exact
  std::vector<NVector<RatC>> egen;
  egen.push_back(NVector<RatC>::basis(4, {1, 2}) +
                 NVector<RatC>::basis(4, {3, 4}) * RatC(2));
  egen.push_back(NVector<RatC>::basis(4, {1, 3}));
  Subspace<RatC> es(4, 2, egen);
  CHECK(es.dim() == 2);
  Subspace<RatC> ec = es.orthogonal_complement();
  CHECK(ec.dim() == 4);
  for (const auto& b : ec.basis())
    for (const auto& g : egen) CHECK(inner_product(g, b).is_zero());
}
