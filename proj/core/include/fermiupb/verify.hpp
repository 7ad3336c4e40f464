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
#include <stdexcept>
#include <string>
#include <vector>

#include "fermiupb/bounds.hpp"
#include "fermiupb/certify.hpp"
#include "fermiupb/constructions.hpp"
#include "fermiupb/plucker.hpp"
#include "fermiupb/search.hpp"

namespace fupb {

/// The candidate's own claims contradict the data (e.g. an
/// orthogonal-claimed set with a large pairwise overlap). Distinct from any
/// verdict: the input is malformed, not refuted.
class claim_violation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unextendibility can be proven (exact or large-margin certificate),
/// refuted (explicit decomposable witness in the complement), or left open.
/// A numerical search never proves: it can only pass (all restarts stay
/// above tol_clear) or land in the gray zone between the tolerances.
enum class Verdict { proven, refuted, inconclusive_pass, inconclusive };

enum class Certificate { none, dim1_plucker, pencil_m4, full_span };

std::string to_string(Verdict v);
std::string to_string(Certificate c);

struct BoundChecks {
  bool min_cardinality_ok = true;  // |S| >= N(M-N)+1 when complement nonzero
  bool ces_dim_ok = true;          // complement_dim <= ces_max_dim(N, M)
};

struct SearchSummary {
  bool ran = false;
  double best_residual = -1.0;
  int restarts_used = 0;
};

struct VerificationReport {
  std::string backend;  // "exact" | "float"
  double orthogonality_residual = 0.0;
  std::int64_t independence_rank = 0;
  double member_decomposability_residual = 0.0;
  std::int64_t complement_dim = 0;
  BoundChecks bound_checks;
  SearchSummary search;
  std::optional<Factorization<Cx>> witness;
  // Witness re-verification, independent of how the witness was found:
  double witness_complement_residual = -1.0;  // ||P_span w|| / ||w||
  double witness_plucker_residual = -1.0;
  Verdict verdict = Verdict::inconclusive;
  Certificate certificate = Certificate::none;
  std::uint64_t seed = 0;
};

/// Largest normalized pairwise overlap max |<i|j>| / (||i|| ||j||).
template <class S>
double check_orthogonality(const CandidateSet<S>& s) {
  if (s.members.empty())
    throw std::invalid_argument("check_orthogonality: empty set");
  double worst = 0.0;
  std::vector<double> norms;
  for (const auto& f : s.members) {
    double n2;
    if constexpr (is_exact_v<S>)
      n2 = factorization_norm2(f).get_d();
    else
      n2 = factorization_norm2(f);
    norms.push_back(std::sqrt(n2));
  }
  for (std::size_t i = 0; i < s.members.size(); ++i)
    for (std::size_t j = i + 1; j < s.members.size(); ++j) {
      S g = gram_inner_product(s.members[i], s.members[j]);
      if (scalar_is_zero(g)) continue;
      worst = std::max(worst,
                       std::abs(to_complex(g)) / (norms[i] * norms[j]));
    }
  return worst;
}

/// Rank of the expansion matrix: exact row reduction on the exact backend,
/// singular values above 1e-10 * sigma_max on the floating one.
template <class S>
std::int64_t check_independence(const CandidateSet<S>& s) {
  std::vector<NVector<S>> exp;
  for (const auto& f : s.members) exp.push_back(wedge_expand(f));
  Subspace<S> sp(s.m, s.n, std::move(exp));
  return sp.dim();
}

/// Full verification pipeline: member decomposability, claimed
/// orthogonality/independence, cardinality and dimension bounds, complement
/// construction, then certificates where available (exact dim-1 Pluecker,
/// the (2,4) pencil) and the multi-start search otherwise.
VerificationReport verify_candidate(const CandidateSet<Cx>& s,
                                    const SearchConfig& cfg);
VerificationReport verify_candidate(const CandidateSet<RatC>& s,
                                    const SearchConfig& cfg);

/// Greedy realization of the "at least d - s orthogonal decomposable
/// states" bound: repeatedly find a decomposable vector in f, restrict to
/// its orthocomplement within f, and continue until a search fails or the
/// space is exhausted. Search failures past the guaranteed d - s count are
/// expected, not an error.
std::vector<Factorization<Cx>> extract_orthogonal_decomposables(
    const Subspace<Cx>& f, const SearchConfig& cfg);

struct IntersectingSubspace {
  std::vector<Vec<Cx>> basis;  // N-dimensional subspace of C^M
  std::vector<double> principal_angles;  // smallest angle against each S_i
  double search_residual = -1.0;
  bool found = false;
  bool within_guarantee = true;  // n <= N(M-N): existence is guaranteed
};

/// Builds an N-dimensional subspace meeting every S_i: it constructs
/// decomposables psi_i supported on S_i's orthocomplement, searches a
/// decomposable f orthogonal to all of them, and returns its support, which
/// meets every S_i. Existence is guaranteed for n <= N(M-N); larger n is
/// allowed (the Vandermonde supports at n = N(M-N)+1 demonstrably admit no
/// such subspace) and reports the failed search instead.
IntersectingSubspace intersecting_subspace(
    const std::vector<std::vector<Vec<Cx>>>& s_list, int m,
    const SearchConfig& cfg);

}  // namespace fupb
