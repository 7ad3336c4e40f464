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

#include <variant>

#include <json.hpp>

#include "fermiupb/constructions.hpp"
#include "fermiupb/verify.hpp"

namespace fupb {

using Json = nlohmann::json;

/// Scalars serialize as {"re", "im"}: numbers on the floating backend
/// (shortest round-trip decimals, so reload is bit-exact), strings "p/q" on
/// the exact backend.
Json scalar_to_json(const Cx& v);
Json scalar_to_json(const RatC& v);

template <class S>
Json nvector_to_json(const NVector<S>& v);
template <class S>
Json factorization_to_json(const Factorization<S>& f);
template <class S>
Json candidate_set_to_json(const CandidateSet<S>& s);

Json product_set_to_json(const ProductSet& s);
Json report_to_json(const VerificationReport& r);

using CandidateSetVar = std::variant<CandidateSet<RatC>, CandidateSet<Cx>>;
using NVectorVar = std::variant<NVector<RatC>, NVector<Cx>>;

/// Parsers throw std::invalid_argument on malformed input. The backend is
/// taken from the "backend" field when present, otherwise inferred from the
/// scalar encoding (strings = exact, numbers = float).
CandidateSetVar parse_candidate_set(const Json& j);
NVectorVar parse_nvector(const Json& j);
Factorization<Cx> parse_factorization_float(const Json& j);

}  // namespace fupb
