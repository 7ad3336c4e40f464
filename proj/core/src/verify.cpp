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
#include "fermiupb/verify.hpp"

#include <algorithm>
#include <cmath>

#include "fermiupb/support.hpp"

namespace fupb {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::proven: return "proven";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive_pass: return "inconclusive-pass";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::none: return "none";
    case Certificate::dim1_plucker: return "dim1-plucker";
    case Certificate::pencil_m4: return "pencil-m4";
    case Certificate::full_span: return "full-span";
  }
  return "?";
}

namespace {

/// Re-verifies a refutation witness against the member span, independent of
/// the path that produced it.
void audit_witness(VerificationReport& rep, const Subspace<Cx>& span_s) {
  if (!rep.witness) return;
  NVector<Cx> w = wedge_expand(*rep.witness);
  VectorXcd x = to_dense(w);
  const MatrixXcd& q = span_s.ortho();
  rep.witness_complement_residual = (q * (q.adjoint() * x)).norm() / x.norm();
  rep.witness_plucker_residual = plucker_residual(w);
}

template <class S>
VerificationReport verify_impl(const CandidateSet<S>& s,
                               const SearchConfig& cfg) {
  cfg.validate();
  if (s.members.empty())
    throw std::invalid_argument("verify_candidate: empty candidate set");

  VerificationReport rep;
  rep.backend = is_exact_v<S> ? "exact" : "float";
  rep.seed = cfg.seed;

  std::vector<NVector<S>> expansions;
  for (const auto& f : s.members) {
    if (f.m != s.m || f.n() != s.n)
      throw std::invalid_argument("verify_candidate: member shape mismatch");
    NVector<S> e = wedge_expand(f);
    if (e.is_zero())
      throw std::invalid_argument("verify_candidate: member expands to zero "
                                  "(linearly dependent factors)");
    rep.member_decomposability_residual = std::max(
        rep.member_decomposability_residual, plucker_residual(e));
    expansions.push_back(std::move(e));
  }

  rep.orthogonality_residual = check_orthogonality(s);
  if (s.claims_orthogonal && rep.orthogonality_residual > 1e-6)
    throw claim_violation("orthogonality claimed but max normalized overlap "
                          "is " + std::to_string(rep.orthogonality_residual));

  Subspace<S> span_s(s.m, s.n, expansions);
  rep.independence_rank = span_s.dim();
  if (s.claims_independent &&
      rep.independence_rank < static_cast<std::int64_t>(s.members.size()))
    throw claim_violation("independence claimed but the expansion rank is "
                          "deficient");

  Subspace<S> complement = span_s.orthogonal_complement();
  rep.complement_dim = complement.dim();
  if (rep.complement_dim != binomial(s.m, s.n) - rep.independence_rank)
    throw std::logic_error("verify_candidate: rank-nullity mismatch");
  rep.bound_checks.min_cardinality_ok =
      rep.complement_dim == 0 ||
      static_cast<std::int64_t>(s.members.size()) >=
          gfupb_min_cardinality(s.n, s.m);
  rep.bound_checks.ces_dim_ok = rep.complement_dim <= ces_max_dim(s.n, s.m);

  // Floating view of the span for witness auditing (and search on the exact
  // backend).
  std::vector<NVector<Cx>> float_exp;
  for (const auto& e : expansions) float_exp.push_back(to_float(e));
  Subspace<Cx> span_f(s.m, s.n, std::move(float_exp));

  auto refute = [&](std::optional<Factorization<Cx>> witness,
                    Certificate cert) {
    rep.verdict = Verdict::refuted;
    rep.certificate = cert;
    rep.witness = std::move(witness);
    audit_witness(rep, span_f);
  };

  if (rep.complement_dim == 0) {
    rep.verdict = Verdict::proven;
    rep.certificate = Certificate::full_span;
    return rep;
  }

  if (rep.complement_dim == 1) {
    Dim1Certificate cert = certify_dim1(complement, cfg.tol_found);
    switch (cert.kind) {
      case Dim1Kind::entangled_exact:
      case Dim1Kind::entangled_float:
        rep.verdict = Verdict::proven;
        rep.certificate = Certificate::dim1_plucker;
        return rep;
      case Dim1Kind::decomposable:
        refute(std::move(cert.witness), Certificate::dim1_plucker);
        return rep;
      case Dim1Kind::unclear:
        rep.verdict = Verdict::inconclusive;
        rep.certificate = Certificate::none;
        return rep;
    }
  }

  Subspace<Cx> complement_f = [&] {
    if constexpr (is_exact_v<S>)
      return complement.to_float_subspace();
    else
      return complement;
  }();

  if (s.n == 2 && s.m == 4 && rep.complement_dim == 2) {
    refute(certify_pencil_m4(complement_f), Certificate::pencil_m4);
    return rep;
  }

  // Opportunistic exact refutation: a decomposable complement basis vector.
  if constexpr (is_exact_v<S>) {
    for (const NVector<RatC>& g : complement.reduced_basis()) {
      if (!is_decomposable_exact(g)) continue;
      if (auto fac = factor_decomposable(g)) {
        refute(to_float(*fac), Certificate::none);
        return rep;
      }
    }
  }

  SearchResult sr = search_decomposable(complement_f, cfg);
  rep.search.ran = true;
  rep.search.best_residual = sr.best_residual;
  rep.search.restarts_used = sr.restarts_used;
  if (sr.found) {
    refute(std::move(sr.witness), Certificate::none);
    return rep;
  }
  rep.verdict = sr.best_residual >= cfg.tol_clear ? Verdict::inconclusive_pass
                                                  : Verdict::inconclusive;
  return rep;
}

}  // namespace

VerificationReport verify_candidate(const CandidateSet<Cx>& s,
                                    const SearchConfig& cfg) {
  return verify_impl(s, cfg);
}

VerificationReport verify_candidate(const CandidateSet<RatC>& s,
                                    const SearchConfig& cfg) {
  return verify_impl(s, cfg);
}

namespace {

/// Deflates a subspace by one contained direction: the orthocomplement of w
/// within `space`.
Subspace<Cx> deflate(const Subspace<Cx>& space, const NVector<Cx>& w) {
  const MatrixXcd& q = space.ortho();
  VectorXcd v = q.adjoint() * to_dense(w);
  v.normalize();
  // Basis of v-perp inside the coefficient space of `space`.
  MatrixXcd house = MatrixXcd::Identity(v.size(), v.size()) -
                    v * v.adjoint();
  Eigen::JacobiSVD<MatrixXcd> svd(house, Eigen::ComputeFullU);
  std::vector<NVector<Cx>> basis;
  for (Eigen::Index c = 0; c + 1 < v.size(); ++c)
    basis.push_back(from_dense(space.m(), space.n(),
                               q * svd.matrixU().col(c)));
  return Subspace<Cx>(space.m(), space.n(), std::move(basis));
}

}  // namespace

std::vector<Factorization<Cx>> extract_orthogonal_decomposables(
    const Subspace<Cx>& f, const SearchConfig& cfg) {
  std::vector<Factorization<Cx>> out;
  Subspace<Cx> current = f;
  while (current.dim() >= 1) {
    std::optional<Factorization<Cx>> found;
    if (current.dim() == 1) {
      Dim1Certificate cert = certify_dim1(current, cfg.tol_found);
      if (cert.kind == Dim1Kind::decomposable) found = std::move(cert.witness);
    } else if (current.n() == 2 && current.m() == 4 && current.dim() == 2) {
      found = certify_pencil_m4(current);
    } else {
      SearchResult sr = search_decomposable(current, cfg);
      if (sr.found) found = std::move(sr.witness);
    }
    if (!found) break;  // past the guaranteed count, or search exhausted
    NVector<Cx> w = wedge_expand(*found);
    out.push_back(std::move(*found));
    if (current.dim() == 1) break;
    current = deflate(current, w);
  }
  return out;
}

IntersectingSubspace intersecting_subspace(
    const std::vector<std::vector<Vec<Cx>>>& s_list, int m,
    const SearchConfig& cfg) {
  if (s_list.empty())
    throw std::invalid_argument("intersecting_subspace: no subspaces");
  const int s_dim = static_cast<int>(s_list[0].size());
  const int n = m - s_dim;
  if (n < 1 || s_dim < 1)
    throw std::invalid_argument("intersecting_subspace: bad dimensions");
  const bool within_guarantee =
      static_cast<std::int64_t>(s_list.size()) <=
      static_cast<std::int64_t>(n) * s_dim;

  // psi_i = wedge of an orthonormal basis of S_i^perp; <psi_i | f> = 0 says
  // exactly that the support of f meets S_i.
  std::vector<NVector<Cx>> psis;
  std::vector<MatrixXcd> s_bases;
  for (const auto& s_vectors : s_list) {
    if (static_cast<int>(s_vectors.size()) != s_dim)
      throw std::invalid_argument("intersecting_subspace: mixed dimensions");
    MatrixXcd a(m, s_dim);
    for (int j = 0; j < s_dim; ++j)
      for (int i = 0; i < m; ++i) a(i, j) = s_vectors[j][i];
    Eigen::JacobiSVD<MatrixXcd> svd(a, Eigen::ComputeFullU);
    s_bases.push_back(svd.matrixU().leftCols(s_dim));
    std::vector<Vec<Cx>> perp;
    for (int c = s_dim; c < m; ++c) {
      Vec<Cx> v(m);
      for (int i = 0; i < m; ++i) v[i] = svd.matrixU()(i, c);
      perp.push_back(std::move(v));
    }
    psis.push_back(wedge_expand(Factorization<Cx>(m, std::move(perp))));
  }

  Subspace<Cx> t = Subspace<Cx>(m, n, psis).orthogonal_complement();
  IntersectingSubspace out;
  out.within_guarantee = within_guarantee;
  if (t.dim() == 0) return out;
  SearchResult sr = search_decomposable(t, cfg);
  out.search_residual = sr.best_residual;
  if (!sr.found) return out;

  out.found = true;
  std::vector<Vec<Cx>> f_basis = support(wedge_expand(*sr.witness));
  MatrixXcd fb(m, static_cast<Eigen::Index>(f_basis.size()));
  for (std::size_t j = 0; j < f_basis.size(); ++j)
    for (int i = 0; i < m; ++i) fb(i, static_cast<Eigen::Index>(j)) = f_basis[j][i];
  for (const MatrixXcd& sb : s_bases) {
    Eigen::JacobiSVD<MatrixXcd> svd(fb.adjoint() * sb);
    double cos_theta = std::min(1.0, svd.singularValues()(0));
    out.principal_angles.push_back(std::acos(cos_theta));
  }
  out.basis = std::move(f_basis);
  return out;
}

}  // namespace fupb
