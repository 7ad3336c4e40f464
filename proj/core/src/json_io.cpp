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
#include "fermiupb/json_io.hpp"

#include <stdexcept>

namespace fupb {

Json scalar_to_json(const Cx& v) {
  return Json{{"re", v.real()}, {"im", v.imag()}};
}

Json scalar_to_json(const RatC& v) {
  return Json{{"re", v.re_str()}, {"im", v.im_str()}};
}

namespace {

bool json_scalar_is_exact(const Json& j) {
  if (!j.contains("re")) throw std::invalid_argument("scalar: missing re/im");
  return j.at("re").is_string();
}

Cx scalar_from_json_float(const Json& j) {
  if (!j.at("re").is_number() || !j.at("im").is_number())
    throw std::invalid_argument("scalar: expected numeric re/im");
  return checked(Cx(j.at("re").get<double>(), j.at("im").get<double>()));
}

RatC scalar_from_json_exact(const Json& j) {
  if (!j.at("re").is_string() || !j.at("im").is_string())
    throw std::invalid_argument("scalar: expected rational string re/im");
  return RatC::from_strings(j.at("re").get<std::string>(),
                            j.at("im").get<std::string>());
}

template <class S>
S scalar_from_json(const Json& j) {
  if constexpr (is_exact_v<S>)
    return scalar_from_json_exact(j);
  else
    return scalar_from_json_float(j);
}

}  // namespace

template <class S>
Json nvector_to_json(const NVector<S>& v) {
  Json entries = Json::array();
  for (const auto& [I, s] : v.coeffs()) {
    Json e = scalar_to_json(s);
    e["idx"] = I.indices();
    entries.push_back(std::move(e));
  }
  return Json{{"m", v.m()},
              {"n", v.n()},
              {"backend", is_exact_v<S> ? "exact" : "float"},
              {"entries", std::move(entries)}};
}
template Json nvector_to_json(const NVector<Cx>&);
template Json nvector_to_json(const NVector<RatC>&);

template <class S>
Json factorization_to_json(const Factorization<S>& f) {
  Json factors = Json::array();
  for (const auto& vec : f.factors) {
    Json fv = Json::array();
    for (const S& s : vec) fv.push_back(scalar_to_json(s));
    factors.push_back(std::move(fv));
  }
  return Json{{"m", f.m}, {"factors", std::move(factors)}};
}
template Json factorization_to_json(const Factorization<Cx>&);
template Json factorization_to_json(const Factorization<RatC>&);

template <class S>
Json candidate_set_to_json(const CandidateSet<S>& s) {
  Json members = Json::array();
  for (const auto& f : s.members) members.push_back(factorization_to_json(f));
  return Json{{"m", s.m},
              {"n", s.n},
              {"kind", s.kind},
              {"backend", is_exact_v<S> ? "exact" : "float"},
              {"claims",
               {{"orthogonal", s.claims_orthogonal},
                {"independent", s.claims_independent}}},
              {"members", std::move(members)}};
}
template Json candidate_set_to_json(const CandidateSet<Cx>&);
template Json candidate_set_to_json(const CandidateSet<RatC>&);

Json product_set_to_json(const ProductSet& s) {
  Json members = Json::array();
  for (const auto& tuple : s.members) {
    Json t = Json::array();
    for (const auto& vec : tuple) {
      Json fv = Json::array();
      for (const Cx& v : vec) fv.push_back(scalar_to_json(v));
      t.push_back(std::move(fv));
    }
    members.push_back(std::move(t));
  }
  return Json{{"dims", s.dims}, {"members", std::move(members)}};
}

Json report_to_json(const VerificationReport& r) {
  Json j{{"backend", r.backend},
         {"orthogonality_residual", r.orthogonality_residual},
         {"independence_rank", r.independence_rank},
         {"member_decomposability_residual",
          r.member_decomposability_residual},
         {"complement_dim", r.complement_dim},
         {"bound_checks",
          {{"min_cardinality_ok", r.bound_checks.min_cardinality_ok},
           {"ces_dim_ok", r.bound_checks.ces_dim_ok}}},
         {"verdict",
          {{"unextendible", to_string(r.verdict)},
           {"certificate", to_string(r.certificate)}}},
         {"seed", r.seed}};
  Json search{{"ran", r.search.ran}};
  if (r.search.ran) {
    search["best_residual"] = r.search.best_residual;
    search["restarts_used"] = r.search.restarts_used;
  }
  if (r.witness) {
    search["witness"] = factorization_to_json(*r.witness);
    j["witness_complement_residual"] = r.witness_complement_residual;
    j["witness_plucker_residual"] = r.witness_plucker_residual;
  }
  j["search"] = std::move(search);
  return j;
}

namespace {

template <class S>
Factorization<S> parse_factorization(const Json& j) {
  if (!j.contains("m") || !j.contains("factors"))
    throw std::invalid_argument("factorization: missing m or factors");
  int m = j.at("m").get<int>();
  std::vector<Vec<S>> factors;
  for (const Json& fv : j.at("factors")) {
    Vec<S> vec;
    for (const Json& sj : fv) vec.push_back(scalar_from_json<S>(sj));
    factors.push_back(std::move(vec));
  }
  return Factorization<S>(m, std::move(factors));
}

template <class S>
CandidateSet<S> parse_candidate_set_as(const Json& j) {
  CandidateSet<S> out;
  out.m = j.at("m").get<int>();
  out.n = j.at("n").get<int>();
  out.kind = j.value("kind", "fupb");
  if (j.contains("claims")) {
    out.claims_orthogonal = j.at("claims").value("orthogonal", false);
    out.claims_independent = j.at("claims").value("independent", false);
  }
  for (const Json& mj : j.at("members")) {
    auto f = parse_factorization<S>(mj);
    if (f.m != out.m || f.n() != out.n)
      throw std::invalid_argument("candidate set: member shape mismatch");
    out.members.push_back(std::move(f));
  }
  return out;
}

bool detect_exact(const Json& j) {
  if (j.contains("backend")) {
    std::string b = j.at("backend").get<std::string>();
    if (b == "exact") return true;
    if (b == "float") return false;
    throw std::invalid_argument("unknown backend: " + b);
  }
  return false;
}

}  // namespace

CandidateSetVar parse_candidate_set(const Json& j) {
  bool exact = false;
  if (j.contains("backend")) {
    exact = detect_exact(j);
  } else {
    // Infer from the first scalar encountered.
    for (const Json& mj : j.at("members")) {
      bool done = false;
      for (const Json& fv : mj.at("factors"))
        if (!fv.empty()) {
          exact = json_scalar_is_exact(fv.front());
          done = true;
          break;
        }
      if (done) break;
    }
  }
  if (exact) return parse_candidate_set_as<RatC>(j);
  return parse_candidate_set_as<Cx>(j);
}

NVectorVar parse_nvector(const Json& j) {
  int m = j.at("m").get<int>();
  int n = j.at("n").get<int>();
  bool exact = detect_exact(j);
  if (!j.contains("backend") && !j.at("entries").empty())
    exact = json_scalar_is_exact(j.at("entries").front());
  if (exact) {
    NVector<RatC> v(m, n);
    for (const Json& e : j.at("entries"))
      v.set(MultiIndex(m, e.at("idx").get<std::vector<int>>()),
            scalar_from_json_exact(e));
    return v;
  }
  NVector<Cx> v(m, n);
  for (const Json& e : j.at("entries"))
    v.set(MultiIndex(m, e.at("idx").get<std::vector<int>>()),
          scalar_from_json_float(e));
  return v;
}

Factorization<Cx> parse_factorization_float(const Json& j) {
  return parse_factorization<Cx>(j);
}

}  // namespace fupb
