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

#include <fermiupb/json_io.hpp>

#include "test_helpers.hpp"

using namespace fupb;

TEST_CASE("scalars: floating reload is bit-exact, rationals are strings") {
  Cx v(0.1 + 0.2, -1.0 / 3.0);
  Json j = scalar_to_json(v);
  std::string dumped = j.dump();
  Json back = Json::parse(dumped);
  CHECK(back.at("re").get<double>() == v.real());
  CHECK(back.at("im").get<double>() == v.imag());

  RatC r = RatC::from_strings("22/7", "-1/3");
  Json jr = scalar_to_json(r);
  CHECK(jr.at("re").get<std::string>() == "22/7");
  CHECK(jr.at("im").get<std::string>() == "-1/3");
}

TEST_CASE("nvector round trip on both backends") {
  NVector<RatC> v(4, 2);
  v.set(MultiIndex(4, {1, 2}), RatC::from_strings("1/2", "3"));
  v.set(MultiIndex(4, {2, 4}), RatC(-2));
  Json j = nvector_to_json(v);
  auto back = parse_nvector(Json::parse(j.dump()));
  REQUIRE(std::holds_alternative<NVector<RatC>>(back));
  CHECK(std::get<NVector<RatC>>(back) == v);

  SplitMix rng(71, 0);
  NVector<Cx> w = fupb::test::random_nvector(5, 3, rng);
  auto back2 = parse_nvector(Json::parse(nvector_to_json(w).dump()));
  REQUIRE(std::holds_alternative<NVector<Cx>>(back2));
  CHECK(std::get<NVector<Cx>>(back2) == w);  // bit-exact reload
}

TEST_CASE("candidate set round trip preserves verdicts end to end") {
  SearchConfig cfg;
  cfg.seed = 9;
  cfg.restarts = 30;

  // float backend: the c4 FUPB
  auto s = fupb_c4(c4_reference_params());
  VerificationReport direct = verify_candidate(s, cfg);
  Json j = candidate_set_to_json(s);
  auto parsed = parse_candidate_set(Json::parse(j.dump()));
  REQUIRE(std::holds_alternative<CandidateSet<Cx>>(parsed));
  const auto& s2 = std::get<CandidateSet<Cx>>(parsed);
  CHECK(s2.claims_orthogonal == s.claims_orthogonal);
  CHECK(s2.kind == s.kind);
  VerificationReport reloaded = verify_candidate(s2, cfg);
  CHECK(reloaded.verdict == direct.verdict);
  CHECK(reloaded.certificate == direct.certificate);
  CHECK(reloaded.orthogonality_residual == direct.orthogonality_residual);

  // exact backend: vandermonde
  auto v = vandermonde_gfupb(2, 4);
  auto parsed2 =
      parse_candidate_set(Json::parse(candidate_set_to_json(v).dump()));
  REQUIRE(std::holds_alternative<CandidateSet<RatC>>(parsed2));
  VerificationReport rv = verify_candidate(std::get<CandidateSet<RatC>>(parsed2), cfg);
  CHECK(rv.verdict == Verdict::proven);
  CHECK(rv.backend == "exact");
}

TEST_CASE("report serialization carries the contract fields") {
  SearchConfig cfg;
  cfg.seed = 10;
  auto s = slater_basis(2, 4);
  s.members.pop_back();
  VerificationReport rep = verify_candidate(s, cfg);
  Json j = report_to_json(rep);
  CHECK(j.at("verdict").at("unextendible") == "refuted");
  CHECK(j.at("complement_dim") == 1);
  CHECK(j.at("seed") == 10);
  CHECK(j.at("search").contains("witness"));
  CHECK(j.at("bound_checks").contains("min_cardinality_ok"));
}

TEST_CASE("malformed and mixed-backend inputs are rejected") {
  CHECK_THROWS_AS(parse_candidate_set(Json::parse(
                      R"({"m":4,"n":2,"members":[{"m":4,"factors":[[{"re":"x/","im":"0"}],[{"re":"1","im":"0"}]]}]})")),
                  std::invalid_argument);
  // a float-tagged set with string scalars
  CHECK_THROWS_AS(parse_candidate_set(Json::parse(
                      R"({"m":4,"n":1,"backend":"float","members":[{"m":4,"factors":[[{"re":"1/2","im":"0"},{"re":"0","im":"0"},{"re":"0","im":"0"},{"re":"0","im":"0"}]]}]})")),
                  std::invalid_argument);
  // malformed multi-index (not strictly increasing)
  CHECK_THROWS_AS(parse_nvector(Json::parse(
                      R"({"m":4,"n":2,"entries":[{"idx":[2,2],"re":1.0,"im":0.0}]})")),
                  std::invalid_argument);
}
