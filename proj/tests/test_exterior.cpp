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

#include <algorithm>

#include <fermiupb/dense.hpp>
#include <fermiupb/factorization.hpp>
#include <fermiupb/support.hpp>

#include "test_helpers.hpp"

using namespace fupb;
using fupb::test::random_factorization;
using fupb::test::random_nvector;
using fupb::test::random_rational_factorization;

TEST_CASE("multi-index rank/unrank is the lexicographic bijection") {
  for (int m = 1; m <= 7; ++m)
    for (int k = 0; k <= m; ++k) {
      auto all = all_multi_indices(m, k);
      REQUIRE(static_cast<std::int64_t>(all.size()) == binomial(m, k));
      for (std::size_t r = 0; r < all.size(); ++r) {
        CHECK(all[r].rank() == static_cast<std::int64_t>(r));
        CHECK(MultiIndex::unrank(m, k, r) == all[r]);
        if (r > 0) CHECK(all[r - 1] < all[r]);
      }
    }
  CHECK_THROWS_AS(MultiIndex(4, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex(4, {3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex(4, {1, 5}), std::invalid_argument);
}

TEST_CASE("wedge_expand basis cases") {
  // (|1>, |2>) in C^4 -> e_{1,2}
  auto f = Factorization<RatC>::basis(4, {1, 2});
  NVector<RatC> v = wedge_expand(f);
  CHECK(v.coeff(MultiIndex(4, {1, 2})) == RatC(1));
  CHECK(v.coeffs().size() == 1);

  // swapped factors flip the sign
  auto g = Factorization<RatC>::basis(4, {2, 1});
  CHECK(wedge_expand(g).coeff(MultiIndex(4, {1, 2})) == RatC(-1));

  // (|1>+|2>, |1>-|2>) -> -2 e_{1,2}
  Factorization<RatC> h(4, {{RatC(1), RatC(1), RatC(0), RatC(0)},
                            {RatC(1), RatC(-1), RatC(0), RatC(0)}});
  NVector<RatC> w = wedge_expand(h);
  CHECK(w.coeff(MultiIndex(4, {1, 2})) == RatC(-2));
  CHECK(w.coeffs().size() == 1);

  // linearly dependent factors expand to zero
  Factorization<RatC> dep(4, {{RatC(1), RatC(2), RatC(0), RatC(0)},
                              {RatC(2), RatC(4), RatC(0), RatC(0)}});
  CHECK(wedge_expand(dep).is_zero());
}

TEST_CASE("inner product basis cases and mismatch errors") {
  auto e12 = NVector<RatC>::basis(4, {1, 2});
  auto e34 = NVector<RatC>::basis(4, {3, 4});
  CHECK(inner_product(e12, e12) == RatC(1));
  CHECK(inner_product(e12, e34) == RatC(0));
  auto e12c3 = NVector<RatC>::basis(3, {1, 2});
  CHECK_THROWS_AS(inner_product(e12, e12c3), std::invalid_argument);

  // conjugate-linear in the first slot
  NVector<Cx> a(4, 2), b(4, 2);
  a.set(MultiIndex(4, {1, 2}), Cx(0, 1));
  b.set(MultiIndex(4, {1, 2}), Cx(2, 0));
  CHECK(inner_product(a, b) == Cx(0, -2));
}

TEST_CASE("gram inner product basis cases") {
  auto u = Factorization<RatC>::basis(4, {1, 2});
  CHECK(gram_inner_product(u, u) == RatC(1));
  CHECK(gram_inner_product(u, Factorization<RatC>::basis(4, {2, 1})) ==
        RatC(-1));
  CHECK(gram_inner_product(u, Factorization<RatC>::basis(4, {1, 3})) ==
        RatC(0));
}

TEST_CASE("antisymmetry: factor permutation scales by the permutation sign") {
  SplitMix rng(11, 0);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_rational_factorization(5, 3, rng);
    NVector<RatC> base = wedge_expand(f);
    // swap two factors: sign -1
    Factorization<RatC> swapped = f;
    std::swap(swapped.factors[0], swapped.factors[2]);
    CHECK(wedge_expand(swapped) == -base);
    // 3-cycle: sign +1
    Factorization<RatC> cycled = f;
    std::rotate(cycled.factors.begin(), cycled.factors.begin() + 1,
                cycled.factors.end());
    CHECK(wedge_expand(cycled) == base);
  }
}

TEST_CASE("Binet-Cauchy: gram determinant equals basis inner product") {
  SplitMix rng(12, 0);
  // exact backend: strict equality
  for (int trial = 0; trial < 50; ++trial) {
    auto u = random_rational_factorization(5, 2, rng);
    auto w = random_rational_factorization(5, 2, rng);
    CHECK(gram_inner_product(u, w) ==
          inner_product(wedge_expand(u), wedge_expand(w)));
  }
  // floating backend
  for (int trial = 0; trial < 50; ++trial) {
    auto u = random_factorization(6, 3, rng);
    auto w = random_factorization(6, 3, rng);
    Cx lhs = gram_inner_product(u, w);
    Cx rhs = inner_product(wedge_expand(u), wedge_expand(w));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("wedge product merge cases") {
  auto e12 = NVector<RatC>::basis(4, {1, 2});
  auto e34 = NVector<RatC>::basis(4, {3, 4});
  CHECK(wedge_product(e12, e34) == NVector<RatC>::basis(4, {1, 2, 3, 4}));
  CHECK(wedge_product(e12, e12).is_zero());

  // (e12 + e34) ^ (e12 + e34) = 2 e_{1,2,3,4}
  NVector<RatC> s = e12 + e34;
  NVector<RatC> sq = wedge_product(s, s);
  CHECK(sq.coeff(MultiIndex(4, {1, 2, 3, 4})) == RatC(2));
  CHECK(sq.coeffs().size() == 1);

  // e13 ^ e24 picks up the merge sign: (1,3,2,4) -> -e_{1,2,3,4}
  CHECK(wedge_product(NVector<RatC>::basis(4, {1, 3}),
                      NVector<RatC>::basis(4, {2, 4}))
            .coeff(MultiIndex(4, {1, 2, 3, 4})) == RatC(-1));

  CHECK_THROWS_AS(wedge_product(NVector<RatC>::basis(4, {1, 2, 3}),
                                NVector<RatC>::basis(4, {1, 4})),
                  std::invalid_argument);

  // decomposable grade-2 vectors square to zero
  SplitMix rng(13, 0);
  for (int trial = 0; trial < 20; ++trial) {
    NVector<Cx> psi = wedge_expand(random_factorization(5, 2, rng));
    CHECK(std::sqrt(wedge_product(psi, psi).norm2()) <=
          1e-10 * psi.norm2() * 10);
  }
}

TEST_CASE("interior product: convention and adjointness") {
  auto e123 = NVector<RatC>::basis(5, {1, 2, 3});
  auto e3 = NVector<RatC>::basis(5, {3});
  CHECK(interior_product(e123, e3) == NVector<RatC>::basis(5, {1, 2}));

  // contraction by the grade-0 unit is the identity
  NVector<RatC> one(5, 0);
  one.set(MultiIndex(5, {}), RatC(1));
  CHECK(interior_product(e123, one) == e123);

  CHECK_THROWS_AS(interior_product(e3, e123), std::invalid_argument);

  // <i_phi psi | xi> = <psi | xi ^ phi> over random floating triples
  SplitMix rng(14, 0);
  for (int trial = 0; trial < 100; ++trial) {
    NVector<Cx> psi = random_nvector(5, 3, rng);
    NVector<Cx> phi = random_nvector(5, 1, rng);
    NVector<Cx> xi = random_nvector(5, 2, rng);
    Cx lhs = inner_product(interior_product(psi, phi), xi);
    Cx rhs = inner_product(psi, wedge_product(xi, phi));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
  for (int trial = 0; trial < 50; ++trial) {
    NVector<Cx> psi = random_nvector(6, 4, rng);
    NVector<Cx> phi = random_nvector(6, 2, rng);
    NVector<Cx> xi = random_nvector(6, 2, rng);
    Cx lhs = inner_product(interior_product(psi, phi), xi);
    Cx rhs = inner_product(psi, wedge_product(xi, phi));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("hodge dual: basis rule, decomposability, isometry modulus") {
  // star e_{1,2} = e_{3,4} in M = 4 (positive shuffle)
  CHECK(hodge_dual(NVector<RatC>::basis(4, {1, 2})) ==
        NVector<RatC>::basis(4, {3, 4}));
  // star e_{1,3} = -e_{2,4}: shuffle (1,3,2,4) is odd
  CHECK(hodge_dual(NVector<RatC>::basis(4, {1, 3})) ==
        -NVector<RatC>::basis(4, {2, 4}));

  SplitMix rng(15, 0);
  for (int trial = 0; trial < 25; ++trial) {
    // duals of decomposables are decomposable, with complementary support
    auto f = random_factorization(5, 2, rng);
    NVector<Cx> psi = wedge_expand(f);
    NVector<Cx> dual = hodge_dual(psi);
    CHECK(plucker_residual(dual) <= 1e-10);
    auto sup = support(psi);
    auto dual_sup = support(dual);
    REQUIRE(sup.size() == 2);
    REQUIRE(dual_sup.size() == 3);
    for (const auto& a : sup)
      for (const auto& b : dual_sup)
        CHECK(std::abs(vec_inner(a, b)) <= 1e-10);
  }
  for (int trial = 0; trial < 25; ++trial) {
    // |<*u, *v>| = |<u, v>|
    NVector<Cx> u = random_nvector(5, 2, rng);
    NVector<Cx> v = random_nvector(5, 2, rng);
    CHECK(std::abs(std::abs(inner_product(hodge_dual(u), hodge_dual(v))) -
                   std::abs(inner_product(u, v))) <= 1e-10);
  }
}

TEST_CASE("hodge dual: applying it twice is the parity sign, exactly") {
  SplitMix rng(18, 0);
  for (auto [m, n] : std::vector<std::pair<int, int>>{
           {4, 2}, {5, 2}, {5, 3}, {6, 3}}) {
    NVector<RatC> psi(m, n);
    for (const MultiIndex& I : all_multi_indices(m, n))
      psi.set(I, RatC(static_cast<long>(rng.next_u64() % 11) - 5));
    // star is conjugate-linear, so star(star(psi)) is linear in psi and
    // equals (-1)^{N(M-N)} psi
    NVector<RatC> twice = hodge_dual(hodge_dual(psi));
    RatC sign((n * (m - n)) % 2 == 0 ? 1 : -1);
    CHECK(twice == psi * sign);
  }
}

TEST_CASE("support: basis, reduced-rank and factor-span cases") {
  // sp(e_{1,2}) = span{|1>, |2>}
  auto sup = support(to_float(NVector<RatC>::basis(4, {1, 2})));
  REQUIRE(sup.size() == 2);
  for (const auto& v : sup) {
    CHECK(std::abs(v[2]) <= 1e-12);
    CHECK(std::abs(v[3]) <= 1e-12);
  }

  // sp(e_{1,2} + e_{3,4}) is everything
  NVector<Cx> s = to_float(NVector<RatC>::basis(4, {1, 2}) +
                           NVector<RatC>::basis(4, {3, 4}));
  CHECK(support(s).size() == 4);

  // sp(wedge_expand(f)) = span(factors)
  SplitMix rng(16, 0);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_factorization(6, 3, rng);
    NVector<Cx> psi = wedge_expand(f);
    auto basis = support(psi);
    REQUIRE(basis.size() == 3);
    // each factor has zero component outside the support basis
    MatrixXcd q(6, 3);
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 6; ++i) q(i, j) = basis[j][i];
    for (const auto& fac : f.factors) {
      VectorXcd x(6);
      for (int i = 0; i < 6; ++i) x[i] = fac[i];
      CHECK((x - q * (q.adjoint() * x)).norm() <= 1e-10 * x.norm());
    }
  }

  CHECK_THROWS_AS(support(NVector<Cx>(4, 2)), std::invalid_argument);
}

TEST_CASE("exterior power application: LU invariance of inner products") {
  SplitMix rng(17, 0);
  for (int trial = 0; trial < 10; ++trial) {
    MatrixXcd u = fupb::test::random_unitary(5, rng);
    NVector<Cx> a = random_nvector(5, 2, rng);
    NVector<Cx> b = random_nvector(5, 2, rng);
    Cx before = inner_product(a, b);
    Cx after = inner_product(apply_exterior_power(u, a),
                             apply_exterior_power(u, b));
    CHECK(std::abs(before - after) <= 1e-10 * std::max(1.0, std::abs(before)));
  }
}
