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
#include "fermiupb/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fermiupb/bounds.hpp"
#include "fermiupb/cyclotomic.hpp"
#include "fermiupb/support.hpp"

namespace fupb {

CandidateSet<RatC> slater_basis(int n, int m) {
  check_grade_domain(n, m);
  CandidateSet<RatC> out{m, n, "trivial", true, true, {}};
  for (const MultiIndex& I : all_multi_indices(m, n))
    out.members.push_back(Factorization<RatC>::basis(m, I.indices()));
  return out;
}

CandidateSet<RatC> vandermonde_gfupb(int n, int m) {
  if (n < 2 || m < 4 || n >= m)
    throw std::invalid_argument("vandermonde_gfupb: need N >= 2, M >= 4, "
                                "N < M");
  CandidateSet<RatC> out{m, n, "gfupb", false, true, {}};
  const std::int64_t count = gfupb_min_cardinality(n, m);
  for (std::int64_t t = 1; t <= count; ++t) {
    std::vector<Vec<RatC>> factors;
    for (int j = 0; j < n; ++j) {
      Vec<RatC> v(m);
      mpz_class node(t + j), power(1);
      for (int p = 0; p < m; ++p) {
        v[p] = RatC(mpq_class(power), 0);
        power *= node;
      }
      factors.push_back(std::move(v));
    }
    out.members.emplace_back(m, std::move(factors));
  }
  return out;
}

namespace {

using ZPoly = std::vector<mpz_class>;  // lowest degree first

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

void zpoly_add_scaled(ZPoly& a, const ZPoly& b, int sign) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] += (sign < 0) ? mpz_class(-b[i]) : b[i];
}

/// (t + c)^e by the binomial theorem.
ZPoly shifted_power(long c, int e) {
  ZPoly out(e + 1);
  mpz_class cc(c);
  for (int k = 0; k <= e; ++k) {
    mpz_class bin;
    mpz_bin_uiui(bin.get_mpz_t(), e, k);
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), cc.get_mpz_t(), e - k);
    out[k] = bin * pw;
  }
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

DeltaPolynomial delta_polynomial(int n, int m, const std::vector<int>& p) {
  if (static_cast<int>(p.size()) != n)
    throw std::invalid_argument("delta_polynomial: p must have N entries");
  int prev = 0;
  for (int v : p) {
    if (v <= prev || v > m)
      throw std::invalid_argument("delta_polynomial: p must be a strictly "
                                  "increasing subset of [1, M]");
    prev = v;
  }

  // Entry (r, s) of the determinant is (t + r - 1)^{p_s - 1}.
  std::vector<std::vector<ZPoly>> entry(n, std::vector<ZPoly>(n));
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) entry[r][s] = shifted_power(r, p[s] - 1);

  ZPoly det;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    ZPoly term = {mpz_class(1)};
    for (int r = 0; r < n; ++r) term = zpoly_mul(term, entry[r][perm[r]]);
    zpoly_add_scaled(det, term, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  while (!det.empty() && det.back() == 0) det.pop_back();

  DeltaPolynomial out;
  out.coeffs = det;
  out.vandermonde_value = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.vandermonde_value *= (j - i);
  for (const mpz_class& c : det) {
    if (!mpz_divisible_p(c.get_mpz_t(), out.vandermonde_value.get_mpz_t()))
      throw std::logic_error("delta_polynomial: coefficient not divisible by "
                             "the Vandermonde value");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(),
                 out.vandermonde_value.get_mpz_t());
    out.quotient_coeffs.push_back(std::move(q));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Complex FUPB of the two-fermion, four-mode space

namespace {

/// The c-parameterized member (a(c)|1> + b|2> + |3>) ^ (|3> + c|4>).
Factorization<Cx> c4_tail_member(double b, Cx c) {
  Cx a = -c / (1.0 + c) - b * b;
  return Factorization<Cx>(
      4, {{a, Cx(b), Cx(1.0), Cx(0.0)}, {Cx(0.0), Cx(0.0), Cx(1.0), c}});
}

Cx c4_pair_inner(double b, Cx c, Cx d) {
  return gram_inner_product(c4_tail_member(b, c), c4_tail_member(b, d));
}

Cx c4_discriminant(double b, Cx d) {
  auto [a, b1, e] = c4_orthogonality_quadratic(b, d);
  return b1 * b1 - 4.0 * a * e;
}

}  // namespace

std::array<Cx, 3> c4_orthogonality_quadratic(double b, Cx d) {
  // <psi_4|psi_5> is conjugate-linear in c; after clearing the denominator,
  // q(s) = (1+s) <psi_4(conj s)|psi_5(d)> is a genuine quadratic in s.
  auto q = [&](Cx s) {
    return (1.0 + s) * c4_pair_inner(b, std::conj(s), d);
  };
  Cx q0 = q(Cx(0.0)), q1 = q(Cx(1.0)), qm2 = q(Cx(-2.0));
  Cx e = q0;
  Cx a = (2.0 * (q1 - e) + (qm2 - e)) / 6.0;
  Cx b1 = (q1 - e) - a;
  return {a, b1, e};
}

C4Params solve_c4_double_root(double b, Cx d0, int max_iters) {
  if (!(b > 0)) throw std::invalid_argument("solve_c4_double_root: b > 0");
  Cx d = d0;
  double fd = std::abs(c4_discriminant(b, d));
  int it = 0;
  for (; it < max_iters && fd > 1e-13; ++it) {
    double h = 1e-7 * std::max(1.0, std::abs(d));
    // The discriminant is holomorphic in d, so a real-step central
    // difference gives the complex derivative.
    Cx deriv = (c4_discriminant(b, d + h) - c4_discriminant(b, d - h)) /
               (2.0 * h);
    if (std::abs(deriv) == 0.0) break;
    Cx step = c4_discriminant(b, d) / deriv;
    double damp = 1.0;
    Cx next = d - step;
    double fn = std::abs(c4_discriminant(b, next));
    while (fn >= fd && damp > 1e-6) {
      damp *= 0.5;
      next = d - damp * step;
      fn = std::abs(c4_discriminant(b, next));
    }
    if (fn >= fd) break;
    d = next;
    fd = fn;
  }
  if (fd > 1e-10)
    throw std::runtime_error("solve_c4_double_root: Newton iteration did not "
                             "reach a vanishing discriminant");
  auto [a, b1, e] = c4_orthogonality_quadratic(b, d);
  C4Params out;
  out.b = b;
  out.c = std::conj(-b1 / (2.0 * a));
  out.d = d;
  out.discriminant_mag = fd;
  out.newton_iters = it;
  return out;
}

C4Params c4_reference_params() {
  return solve_c4_double_root(2.0, Cx(1.13631, -0.197693));
}

CandidateSet<Cx> fupb_c4(const C4Params& params) {
  const double b = params.b;
  if (!(b > 0) || params.c == Cx(0.0) || params.d == Cx(0.0))
    throw std::invalid_argument("fupb_c4: need b > 0 and nonzero c, d");
  CandidateSet<Cx> out{4, 2, "fupb", true, true, {}};
  out.members.push_back(Factorization<Cx>::basis(4, {1, 2}));
  out.members.emplace_back(
      4, std::vector<Vec<Cx>>{{Cx(0.0), Cx(1.0), Cx(-b), Cx(0.0)},
                              {Cx(0.0), Cx(0.0), Cx(0.0), Cx(1.0)}});
  out.members.emplace_back(
      4, std::vector<Vec<Cx>>{{Cx(1.0), Cx(b), Cx(1.0), Cx(0.0)},
                              {Cx(0.0), Cx(0.0), Cx(1.0), Cx(1.0)}});
  out.members.push_back(c4_tail_member(b, params.c));
  out.members.push_back(c4_tail_member(b, params.d));

  // Reject parameters far off the double-root family; six-digit
  // reference values must still pass.
  double worst = 0;
  for (std::size_t i = 0; i < out.members.size(); ++i)
    for (std::size_t j = i + 1; j < out.members.size(); ++j) {
      double ip = std::abs(gram_inner_product(out.members[i], out.members[j]));
      double ni = std::sqrt(factorization_norm2(out.members[i]));
      double nj = std::sqrt(factorization_norm2(out.members[j]));
      worst = std::max(worst, ip / (ni * nj));
    }
  if (worst > 1e-3)
    throw std::invalid_argument("fupb_c4: parameters violate pairwise "
                                "orthogonality");
  return out;
}

// ---------------------------------------------------------------------------
// Real impossibility machinery

void RealCanonicalParams::validate() const {
  for (double v : {b, c1, d1, e1, c6, d6, e6})
    if (v == 0.0 || !std::isfinite(v))
      throw std::invalid_argument("RealCanonicalParams: all parameters must "
                                  "be finite and nonzero");
  auto check = [&](double lhs, double x6, double y6) {
    if (std::abs(1.0 + x6 * y6) < 1e-12)
      throw std::invalid_argument("RealCanonicalParams: 1 + x6 y6 vanishes");
    double rhs = 1.0 / (1.0 + x6 * y6) - b * b - 1.0;
    if (std::abs(lhs - rhs) > 1e-8 * std::max(1.0, std::abs(rhs)))
      throw std::invalid_argument("RealCanonicalParams: orthogonality "
                                  "constraint violated");
  };
  check(c1 * d1, c6, d6);
  check(c1 * e1, c6, e6);
  check(d1 * e1, d6, e6);
}

RealCanonicalParams sample_real_canonical(SplitMix& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    double b = 0.3 + 2.2 * rng.next_double();
    double c6 = -2.0 + 4.0 * rng.next_double();
    double d6 = -2.0 + 4.0 * rng.next_double();
    double e6 = -2.0 + 4.0 * rng.next_double();
    if (std::abs(c6) < 1e-2 || std::abs(d6) < 1e-2 || std::abs(e6) < 1e-2)
      continue;
    if (std::abs(1 + c6 * d6) < 1e-2 || std::abs(1 + c6 * e6) < 1e-2 ||
        std::abs(1 + d6 * e6) < 1e-2)
      continue;
    double pq = 1.0 / (1 + c6 * d6) - b * b - 1;
    double qq = 1.0 / (1 + c6 * e6) - b * b - 1;
    double rq = 1.0 / (1 + d6 * e6) - b * b - 1;
    if (std::abs(pq) < 1e-3 || std::abs(qq) < 1e-3 || std::abs(rq) < 1e-3)
      continue;
    double c1sq = pq * qq / rq;
    if (c1sq < 1e-6) continue;
    double c1 = std::sqrt(c1sq);
    double d1 = pq / c1, e1 = qq / c1;
    if (std::abs(d1) < 1e-3 || std::abs(e1) < 1e-3) continue;
    RealCanonicalParams p{b, c1, d1, e1, c6, d6, e6};
    p.validate();
    return p;
  }
  throw std::runtime_error("sample_real_canonical: rejection sampling failed");
}

namespace {

Factorization<Cx> real_tail_member(double x1, double b, double x6) {
  return Factorization<Cx>(4, {{Cx(x1), Cx(-b), Cx(1.0), Cx(0.0)},
                               {Cx(0.0), Cx(0.0), Cx(1.0), Cx(x6)}});
}

}  // namespace

CandidateSet<Cx> real_canonical_members(const RealCanonicalParams& p) {
  p.validate();
  CandidateSet<Cx> out{4, 2, "fupb", true, true, {}};
  out.members.push_back(Factorization<Cx>::basis(4, {1, 2}));
  out.members.emplace_back(
      4, std::vector<Vec<Cx>>{{Cx(0.0), Cx(1.0), Cx(p.b), Cx(0.0)},
                              {Cx(0.0), Cx(0.0), Cx(0.0), Cx(1.0)}});
  out.members.push_back(real_tail_member(p.c1, p.b, p.c6));
  out.members.push_back(real_tail_member(p.d1, p.b, p.d6));
  out.members.push_back(real_tail_member(p.e1, p.b, p.e6));
  return out;
}

Factorization<Cx> real_extension_witness(const RealCanonicalParams& p) {
  p.validate();
  double f1 = (std::pow(p.b, 4) + p.b * p.b) / (p.c1 * p.d1 * p.e1);
  double f6 = p.b * p.b / (p.c6 * p.d6 * p.e6 * (1.0 + p.b * p.b));
  return real_tail_member(f1, p.b, f6);
}

// ---------------------------------------------------------------------------
// Dimension lifting and composition

template <class S>
CandidateSet<S> pad_fupb(const CandidateSet<S>& s) {
  if (s.n != 2)
    throw std::invalid_argument("pad_fupb: only grade-2 sets can be padded");
  CandidateSet<S> out{s.m + 1, 2, "fupb", s.claims_orthogonal,
                      s.claims_independent, {}};
  for (const auto& f : s.members) {
    std::vector<Vec<S>> factors = f.factors;
    for (auto& v : factors) v.push_back(S(0));
    out.members.emplace_back(s.m + 1, std::move(factors));
  }
  for (int i = 1; i <= s.m; ++i)
    out.members.push_back(Factorization<S>::basis(s.m + 1, {s.m + 1, i}));
  return out;
}

template CandidateSet<RatC> pad_fupb(const CandidateSet<RatC>&);
template CandidateSet<Cx> pad_fupb(const CandidateSet<Cx>&);

namespace {

Vec<Cx> embed_at(const Vec<Cx>& v, int offset, int total) {
  Vec<Cx> out(total, Cx(0.0));
  for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
  return out;
}

}  // namespace

CandidateSet<Cx> compose_bipartite_fupb(
    const std::vector<int>& dims, const std::vector<CandidateSet<Cx>>& x,
    const std::map<std::pair<int, int>, ProductSet>& y) {
  const int blocks = static_cast<int>(dims.size());
  std::vector<int> offset(blocks, 0);
  int total = 0;
  for (int i = 0; i < blocks; ++i) {
    if (dims[i] < 1)
      throw std::invalid_argument("compose: block dimensions must be >= 1");
    offset[i] = total;
    total += dims[i];
  }

  CandidateSet<Cx> out{total, 2, "fupb", true, true, {}};

  std::size_t xi = 0;
  for (int i = 0; i < blocks; ++i) {
    if (dims[i] < 2) continue;  // 1-dim blocks carry no 2-vectors
    if (xi >= x.size())
      throw std::invalid_argument("compose: missing FUPB for a block of "
                                  "dimension >= 2");
    const CandidateSet<Cx>& xs = x[xi++];
    if (xs.m != dims[i] || xs.n != 2)
      throw std::invalid_argument("compose: block FUPB has wrong shape");
    for (const auto& f : xs.members)
      out.members.emplace_back(
          total, std::vector<Vec<Cx>>{embed_at(f.factors[0], offset[i], total),
                                      embed_at(f.factors[1], offset[i],
                                               total)});
  }
  if (xi != x.size())
    throw std::invalid_argument("compose: unused block FUPB inputs");

  for (int j = 0; j < blocks; ++j)
    for (int k = j + 1; k < blocks; ++k) {
      auto it = y.find({j, k});
      if (it == y.end())
        throw std::invalid_argument("compose: missing UPB for a block pair");
      const ProductSet& upb = it->second;
      if (upb.dims != std::vector<int>{dims[j], dims[k]})
        throw std::invalid_argument("compose: UPB has wrong dimensions");
      // x_j (x) x_k -> x_j ^ x_k is an isometry between the tensor space of
      // two orthogonal blocks and its image, so UPB members stay orthogonal
      // and unextendible inside the wedge.
      for (const auto& pair : upb.members)
        out.members.emplace_back(
            total,
            std::vector<Vec<Cx>>{embed_at(pair[0], offset[j], total),
                                 embed_at(pair[1], offset[k], total)});
    }
  return out;
}

CandidateSet<Cx> compose_3_3_pentagon() {
  std::vector<CandidateSet<Cx>> x = {to_float(slater_basis(2, 3)),
                                     to_float(slater_basis(2, 3))};
  std::map<std::pair<int, int>, ProductSet> y;
  y[{0, 1}] = pentagon_upb();
  return compose_bipartite_fupb({3, 3}, x, y);
}

CandidateSet<Cx> hyperplane_fupb(int n, int m) {
  if (n < 2 || m < n + 2)
    throw std::invalid_argument("hyperplane_fupb: need N >= 2 and M >= N+2");
  std::vector<int> tail;
  for (int t = 5; t <= n + 2; ++t) tail.push_back(t);

  CandidateSet<Cx> out{m, n, "fupb", true, true, {}};
  for (const MultiIndex& I : all_multi_indices(m, n)) {
    // Skip e_{ij} ^ e_{5..N+2} for the six pairs {i,j} in {1..4}.
    int low = 0;
    bool has_tail = true;
    for (int t : tail)
      if (!I.contains(t)) has_tail = false;
    for (int v : I.indices())
      if (v <= 4) ++low;
    if (has_tail && low == 2 &&
        static_cast<int>(I.grade()) == static_cast<int>(tail.size()) + 2)
      continue;
    out.members.push_back(Factorization<Cx>::basis(m, I.indices()));
  }

  const CandidateSet<Cx> c4 = fupb_c4(c4_reference_params());
  for (const auto& f : c4.members) {
    std::vector<Vec<Cx>> factors;
    for (const auto& v : f.factors) factors.push_back(embed_at(v, 0, m));
    for (int t : tail) {
      Vec<Cx> e(m, Cx(0.0));
      e[t - 1] = Cx(1.0);
      factors.push_back(std::move(e));
    }
    out.members.emplace_back(m, std::move(factors));
  }
  return out;
}

CandidateSet<Cx> hyperplane_gfupb_spanning(int m, int k) {
  if (k < 1 || 2 * k > m)
    throw std::invalid_argument("hyperplane_gfupb_spanning: need "
                                "1 <= k <= M/2");
  CandidateSet<Cx> out{m, 2, "gfupb", false, true, {}};
  for (const MultiIndex& I : all_multi_indices(m, 2)) {
    bool diagonal_pair = I[0] % 2 == 1 && I[1] == I[0] + 1 && I[1] <= 2 * k;
    if (!diagonal_pair)
      out.members.push_back(Factorization<Cx>::basis(m, I.indices()));
  }
  for (int j = 1; j < k; ++j) {
    Vec<Cx> u(m, Cx(0.0)), w(m, Cx(0.0));
    for (int l = 0; l < k; ++l) {
      double angle = 2.0 * std::numbers::pi * j * l / k;
      u[2 * l] = Cx(std::cos(angle), std::sin(angle));  // omega^{j l}
      w[2 * l + 1] = Cx(1.0);
    }
    out.members.emplace_back(m, std::vector<Vec<Cx>>{u, w});
  }
  return out;
}

SpanningExactCheck hyperplane_spanning_exact_check(int m, int k) {
  if (k < 1 || 2 * k > m)
    throw std::invalid_argument("hyperplane_spanning_exact_check: need "
                                "1 <= k <= M/2");
  const std::int64_t dim = binomial(m, 2);
  auto pair_rank = [&](int i, int j) {  // 1-based i < j
    return MultiIndex(m, {i, j}).rank();
  };

  FieldMatrix<CycloRat> rows;
  for (const MultiIndex& I : all_multi_indices(m, 2)) {
    bool diagonal_pair = I[0] % 2 == 1 && I[1] == I[0] + 1 && I[1] <= 2 * k;
    if (diagonal_pair) continue;
    std::vector<CycloRat> row(dim, CycloRat(0));
    row[I.rank()] = CycloRat(1);
    rows.push_back(std::move(row));
  }
  std::vector<CycloRat> diag_sums;  // <psi|member> per twisted member
  for (int j = 1; j < k; ++j) {
    std::vector<CycloRat> row(dim, CycloRat(0));
    CycloRat diag_sum(0);
    for (int l = 0; l < k; ++l)
      for (int lp = 0; lp < k; ++lp) {
        CycloRat coeff = CycloRat::zeta(k, static_cast<long>(j) * l);
        int a = 2 * l + 1, bq = 2 * lp + 2;  // |2l+1> ^ |2lp+2>, 1-based
        if (a < bq)
          row[pair_rank(a, bq)] += coeff;
        else
          row[pair_rank(bq, a)] -= coeff;
        if (lp == l) diag_sum += coeff;
      }
    rows.push_back(std::move(row));
    diag_sums.push_back(std::move(diag_sum));
  }

  SpanningExactCheck out;
  out.rank = field_rank(std::move(rows));
  out.orthogonal_to_psi = true;
  for (const CycloRat& s : diag_sums)
    if (!s.is_zero()) out.orthogonal_to_psi = false;
  return out;
}

Codim3 codim3_not_spanned(int n, int m) {
  if (n < 2 || m < n + 2)
    throw std::invalid_argument("codim3_not_spanned: need M >= N+2 >= 4");
  std::vector<int> tail;
  for (int t = 5; t <= n + 2; ++t) tail.push_back(t);

  NVector<RatC> phi(m, n - 2);
  phi.set(MultiIndex(m, tail), RatC(1));

  auto wedge_tail = [&](int i, int j) {
    std::vector<int> idx = {i, j};
    idx.insert(idx.end(), tail.begin(), tail.end());
    return MultiIndex(m, idx);  // {i,j} < 5 <= tail: already sorted
  };
  const std::array<std::pair<int, int>, 4> excluded = {
      std::pair{1, 2}, {2, 3}, {2, 4}, {3, 4}};

  std::vector<NVector<RatC>> l0_basis;
  for (const MultiIndex& I : all_multi_indices(m, n)) {
    bool skip = false;
    for (auto [i, j] : excluded)
      if (I == wedge_tail(i, j)) skip = true;
    if (!skip) l0_basis.push_back(NVector<RatC>::basis(m, I.indices()));
  }

  NVector<RatC> psi(m, n);
  psi.set(wedge_tail(1, 2), RatC(1));
  psi.set(wedge_tail(3, 4), RatC(1));

  std::vector<NVector<RatC>> l_basis = l0_basis;
  l_basis.push_back(psi);

  return Codim3{Subspace<RatC>(m, n, std::move(l_basis)),
                Subspace<RatC>(m, n, std::move(l0_basis)), std::move(phi),
                std::move(psi)};
}

template <class S>
CandidateSet<S> dual_fupb(const CandidateSet<S>& s) {
  if (s.n < 1 || s.n >= s.m)
    throw std::invalid_argument("dual_fupb: dual grade M-N must be >= 1 and "
                                "N >= 1");
  CandidateSet<S> out{s.m, s.m - s.n, s.kind, s.claims_orthogonal,
                      s.claims_independent, {}};
  for (const auto& f : s.members) {
    NVector<S> dual = hodge_dual(wedge_expand(f));
    auto fac = factor_decomposable(dual);
    if (!fac)
      throw std::logic_error("dual_fupb: dual of a decomposable vector must "
                             "be decomposable");
    out.members.push_back(std::move(*fac));
  }
  return out;
}

template CandidateSet<RatC> dual_fupb(const CandidateSet<RatC>&);
template CandidateSet<Cx> dual_fupb(const CandidateSet<Cx>&);

}  // namespace fupb
