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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fermiupb/factorization.hpp"
#include "fermiupb/product_state.hpp"
#include "fermiupb/rng.hpp"
#include "fermiupb/subspace.hpp"

namespace fupb {

/// A set of decomposable N-vectors together with what it claims to be.
/// Claims are inputs to the verifier, not conclusions.
template <class S>
struct CandidateSet {
  int m = 0, n = 0;
  std::string kind;  // trivial | gfupb | fupb | upb-embedded
  bool claims_orthogonal = false;
  bool claims_independent = false;
  std::vector<Factorization<S>> members;

  std::size_t size() const { return members.size(); }
};

inline CandidateSet<Cx> to_float(const CandidateSet<RatC>& s) {
  CandidateSet<Cx> out{s.m, s.n, s.kind, s.claims_orthogonal,
                       s.claims_independent, {}};
  for (const auto& f : s.members) out.members.push_back(to_float(f));
  return out;
}

// ---------------------------------------------------------------------------
// Exact integer constructions

/// The trivial FUPB: all C(M,N) Slater determinant basis factorizations.
CandidateSet<RatC> slater_basis(int n, int m);

/// The minimum-cardinality generalized FUPB: N(M-N)+1 members, member t
/// having factor j = sum_p (t+j-1)^{p-1} |p> for t = 1..N(M-N)+1. Members
/// are linearly independent but not orthogonal; their orthogonal complement
/// is completely entangled.
CandidateSet<RatC> vandermonde_gfupb(int n, int m);

/// The polynomial Delta_p(t) = det[(t+r-1)^{p_s-1}]_{r,s=1..N}, expanded
/// exactly. Its degree is sum(p) - N - C(N,2), and dividing by the constant
/// Vandermonde value V_N(t,...,t+N-1) = prod_{i<j}(j-i) leaves a polynomial
/// with non-negative integer coefficients.
struct DeltaPolynomial {
  std::vector<mpz_class> coeffs;           // lowest degree first
  mpz_class vandermonde_value;             // prod_{i<j} (j - i)
  std::vector<mpz_class> quotient_coeffs;  // coeffs / vandermonde_value
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};
DeltaPolynomial delta_polynomial(int n, int m, const std::vector<int>& p);

// ---------------------------------------------------------------------------
// The five-member complex FUPB of the two-fermion, four-mode space

/// Parameters of the double-root family: b > 0 real, c, d nonzero complex
/// with <psi_4|psi_5> = 0 and the orthogonality quadratic (in conj c)
/// having a vanishing discriminant, so the double root pins c.
struct C4Params {
  double b = 2.0;
  Cx c{};
  Cx d{};
  double discriminant_mag = 0.0;  // |disc| at the returned d
  int newton_iters = 0;
};

/// Coefficients (a, b_, e) of the orthogonality quadratic
/// a s^2 + b_ s + e = 0 in s = conj(c), for fixed b and d.
std::array<Cx, 3> c4_orthogonality_quadratic(double b, Cx d);

/// Finds (c, d) with a double root by damped Newton iteration on the
/// discriminant as a holomorphic function of d, starting from d0.
/// Throws std::runtime_error if Newton fails to converge.
C4Params solve_c4_double_root(double b, Cx d0, int max_iters = 100);

/// The five decomposable states psi_1..psi_5 built from the parameters;
/// pairwise orthogonal when the parameters satisfy the double-root
/// condition.
CandidateSet<Cx> fupb_c4(const C4Params& params);

/// Convenience: re-solve from the reference seed (b = 2).
C4Params c4_reference_params();

// ---------------------------------------------------------------------------
// Real impossibility machinery

/// Parameters of the real canonical five-state form. All entries must be
/// nonzero and satisfy the three orthogonality constraints
/// c1 d1 = 1/(1 + c6 d6) - b^2 - 1 (and cyclic).
struct RealCanonicalParams {
  double b, c1, d1, e1, c6, d6, e6;
  void validate() const;  // throws std::invalid_argument
};

/// Rejection-samples a valid parameter set (b, c6, d6, e6 free; c1, d1, e1
/// solved from the constraints).
RealCanonicalParams sample_real_canonical(SplitMix& rng);

/// The five orthogonal canonical states of the real form.
CandidateSet<Cx> real_canonical_members(const RealCanonicalParams& p);

/// The decomposable state (f1|1> - b|2> + |3>) ^ (|3> + f6|4>) with
/// f1 = (b^4+b^2)/(c1 d1 e1), f6 = b^2/(c6 d6 e6 (1+b^2)); orthogonal to all
/// five canonical states, which is why no real five-state FUPB exists.
Factorization<Cx> real_extension_witness(const RealCanonicalParams& p);

// ---------------------------------------------------------------------------
// Dimension lifting and composition

/// Re-embeds a grade-2 set into C^{M+1} and appends |M+1> ^ |i>, i = 1..M.
template <class S>
CandidateSet<S> pad_fupb(const CandidateSet<S>& s);

/// Members of per-block FUPBs plus embedded bipartite UPB pairs across
/// blocks. Block i occupies coordinates offset_i+1 .. offset_i+d_i with
/// offsets by prefix sums. Blocks of dimension 1 contribute no FUPB; the
/// map from (j,k) to a UPB must cover every pair of blocks with d_j, d_k
/// >= 1.
CandidateSet<Cx> compose_bipartite_fupb(
    const std::vector<int>& dims, const std::vector<CandidateSet<Cx>>& x,
    const std::map<std::pair<int, int>, ProductSet>& y);

/// The 3+3+pentagon instance: eleven orthogonal members of the two-fermion,
/// six-mode space whose complement is completely entangled of dimension 4.
CandidateSet<Cx> compose_3_3_pentagon();

/// FUPB of cardinality C(M,N)-1: every Slater determinant except the six
/// e_{ij} ^ e_{5..N+2} with {i,j} in {1..4}, plus the five c4 members wedged
/// with e_{5..N+2}. Requires M >= N+2; for N = 2, M = 4 this is fupb_c4.
CandidateSet<Cx> hyperplane_fupb(int n, int m);

/// Decomposable 2-vectors spanning the hyperplane orthogonal to
/// psi = sum_{i<=k} e_{2i-1,2i}: the basis members e_{ij} off the diagonal
/// pairs plus k-1 root-of-unity twisted members
/// (sum_l omega^{j(l-1)} |2l-1>) ^ (sum_l |2l>), omega = exp(2 pi i / k).
CandidateSet<Cx> hyperplane_gfupb_spanning(int m, int k);

/// Exact certificate for the spanning construction, in the cyclotomic field
/// Q(zeta_k): the span has rank C(M,2)-1 and every member is exactly
/// orthogonal to psi.
struct SpanningExactCheck {
  int rank;
  bool orthogonal_to_psi;
};
SpanningExactCheck hyperplane_spanning_exact_check(int m, int k);

/// The codimension-3 subspace not spanned by decomposable vectors:
/// L = span(L0, (e_12 + e_34) ^ phi) with phi = e_{5..N+2} and L0 the span
/// of all basis N-vectors except the four e_{ij} ^ phi,
/// (i,j) in {(1,2),(2,3),(2,4),(3,4)}.
struct Codim3 {
  Subspace<RatC> l;
  Subspace<RatC> l0;
  NVector<RatC> phi;
  NVector<RatC> psi;  // (e_12 + e_34) ^ phi
};
Codim3 codim3_not_spanned(int n, int m);

/// Hodge duals of all members, refactored into grade-(M-N) factorizations.
/// Orthogonality is preserved since the dual is a conjugate-linear isometry
/// up to modulus.
template <class S>
CandidateSet<S> dual_fupb(const CandidateSet<S>& s);

}  // namespace fupb
