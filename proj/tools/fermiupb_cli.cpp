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

// Command-line front end: construct the catalogued (generalized) FUPBs,
// verify candidate sets with honest verdicts, transform (Hodge dual, Slater
// decomposition, expansion), and print the dimension bounds. All I/O is the
// JSON documented in the README.
//
// Exit codes: 0 proven or inconclusive-pass, 1 inconclusive (gray zone),
// 2 refuted, 3 claim violation, 4 input/usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <fermiupb/antisym.hpp>
#include <fermiupb/bounds.hpp>
#include <fermiupb/json_io.hpp>

namespace {

using namespace fupb;

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitRefuted = 2;
constexpr int kExitClaimViolation = 3;
constexpr int kExitInputError = 4;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FERMI_UPB_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

Json read_json_input(const std::string& path) {
  if (path.empty() || path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  return Json::parse(in);
}

void emit(const Json& j, const std::string& out_path, bool pretty) {
  std::string text = pretty ? j.dump(2) : j.dump();
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text << "\n";
}

struct CommonOpts {
  std::string in, out;
  std::string format = "json";
  bool pretty() const { return format == "pretty"; }
};

int run_construct(const std::string& name, int n, int m, double b, int k,
                  const std::vector<int>& dims, std::uint64_t seed,
                  const CommonOpts& io) {
  Json j;
  if (name == "slater") {
    j = candidate_set_to_json(slater_basis(n, m));
  } else if (name == "vandermonde") {
    j = candidate_set_to_json(vandermonde_gfupb(n, m));
  } else if (name == "fupb-c4") {
    C4Params p = solve_c4_double_root(b, Cx(1.13631, -0.197693));
    j = candidate_set_to_json(fupb_c4(p));
    j["params"] = {{"b", p.b},
                   {"c", {p.c.real(), p.c.imag()}},
                   {"d", {p.d.real(), p.d.imag()}},
                   {"discriminant_mag", p.discriminant_mag}};
  } else if (name == "pad") {
    auto parsed = parse_candidate_set(read_json_input(io.in));
    j = std::visit(
        [](const auto& s) { return candidate_set_to_json(pad_fupb(s)); },
        parsed);
  } else if (name == "compose-3-3-pentagon") {
    j = candidate_set_to_json(compose_3_3_pentagon());
  } else if (name == "hyperplane") {
    j = candidate_set_to_json(hyperplane_fupb(n, m));
  } else if (name == "hyperplane-spanning") {
    j = candidate_set_to_json(hyperplane_gfupb_spanning(m, k));
    auto exact = hyperplane_spanning_exact_check(m, k);
    j["exact_check"] = {{"rank", exact.rank},
                        {"orthogonal_to_psi", exact.orthogonal_to_psi}};
  } else if (name == "codim3") {
    Codim3 c = codim3_not_spanned(n, m);
    Json basis = Json::array();
    for (const auto& v : c.l.basis()) basis.push_back(nvector_to_json(v));
    j = Json{{"m", m},
             {"n", n},
             {"dim", c.l.dim()},
             {"phi", nvector_to_json(c.phi)},
             {"psi", nvector_to_json(c.psi)},
             {"basis", std::move(basis)}};
  } else if (name == "dual") {
    auto parsed = parse_candidate_set(read_json_input(io.in));
    j = std::visit(
        [](const auto& s) { return candidate_set_to_json(dual_fupb(s)); },
        parsed);
  } else if (name == "block-unitary-upb") {
    j = product_set_to_json(block_unitary_upb(dims, seed));
  } else {
    throw std::invalid_argument("unknown construction: " + name);
  }
  emit(j, io.out, io.pretty());
  return kExitOk;
}

int run_verify(const SearchConfig& cfg, const CommonOpts& io) {
  auto parsed = parse_candidate_set(read_json_input(io.in));
  VerificationReport rep = std::visit(
      [&](const auto& s) { return verify_candidate(s, cfg); }, parsed);
  emit(report_to_json(rep), io.out, io.pretty());
  switch (rep.verdict) {
    case Verdict::proven:
    case Verdict::inconclusive_pass:
      return kExitOk;
    case Verdict::refuted:
      return kExitRefuted;
    case Verdict::inconclusive:
      return kExitInconclusive;
  }
  return kExitInputError;
}

int run_transform(const std::string& kind, const CommonOpts& io) {
  Json input = read_json_input(io.in);
  Json j;
  if (kind == "dual") {
    auto parsed = parse_candidate_set(input);
    j = std::visit(
        [](const auto& s) { return candidate_set_to_json(dual_fupb(s)); },
        parsed);
  } else if (kind == "slater-decompose") {
    auto parsed = parse_nvector(input);
    NVector<Cx> psi = std::holds_alternative<NVector<Cx>>(parsed)
                          ? std::get<NVector<Cx>>(parsed)
                          : to_float(std::get<NVector<RatC>>(parsed));
    SlaterDecomposition sd = slater_decomposition(psi);
    Json unitary = Json::array();
    for (Eigen::Index r = 0; r < sd.unitary.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < sd.unitary.cols(); ++c)
        row.push_back(scalar_to_json(sd.unitary(r, c)));
      unitary.push_back(std::move(row));
    }
    j = Json{{"coeffs", sd.coeffs}, {"unitary", std::move(unitary)}};
  } else if (kind == "expand") {
    Factorization<Cx> f = parse_factorization_float(input);
    j = nvector_to_json(wedge_expand(f));
  } else {
    throw std::invalid_argument("unknown transform: " + kind);
  }
  emit(j, io.out, io.pretty());
  return kExitOk;
}

int run_bounds(int n, int m, const std::vector<int>& dims,
               const CommonOpts& io) {
  Json j;
  if (!dims.empty()) {
    std::vector<std::int64_t> d(dims.begin(), dims.end());
    TensorBounds b = tensor_upb_bounds(d);
    j = Json{{"dims", dims}, {"L", b.l_n}, {"D", b.d_n}};
    if (b.has_f_m) j["f_m"] = b.f_m;
  } else {
    j = Json{{"n", n},
             {"m", m},
             {"ces_max_dim", ces_max_dim(n, m)},
             {"gfupb_min", gfupb_min_cardinality(n, m)},
             {"full_dim", binomial(m, n)}};
  }
  emit(j, io.out, io.pretty());
  return kExitOk;
}

int run_demo(std::uint64_t seed) {
  SearchConfig cfg;
  cfg.seed = seed;
  std::cout << "bounds (N=2, M=4): ces_max_dim=" << ces_max_dim(2, 4)
            << " gfupb_min=" << gfupb_min_cardinality(2, 4) << "\n";

  auto v = vandermonde_gfupb(2, 4);
  auto rv = verify_candidate(v, cfg);
  std::cout << "vandermonde(2,4): members=" << v.size()
            << " verdict=" << to_string(rv.verdict)
            << " certificate=" << to_string(rv.certificate) << "\n";

  auto s = fupb_c4(c4_reference_params());
  auto rs = verify_candidate(s, cfg);
  std::cout << "fupb-c4 (b=2): members=" << s.size()
            << " orthogonality=" << rs.orthogonality_residual
            << " verdict=" << to_string(rs.verdict)
            << " certificate=" << to_string(rs.certificate) << "\n";

  auto broken = slater_basis(2, 4);
  broken.members.pop_back();
  auto rb = verify_candidate(broken, cfg);
  std::cout << "slater(2,4) minus one: verdict=" << to_string(rb.verdict)
            << " (witness recovered)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fermionic unextendible product bases: construct, verify, "
               "transform, bounds"};
  app.require_subcommand(1);

  CommonOpts io;
  int n = 2, m = 4, k = 2;
  double b = 2.0;
  std::vector<int> dims;
  SearchConfig cfg;
  cfg.seed = default_seed();

  std::string construct_name;
  CLI::App* construct =
      app.add_subcommand("construct", "emit a catalogued construction");
  construct->add_option("name", construct_name,
                        "slater | vandermonde | fupb-c4 | pad | "
                        "compose-3-3-pentagon | hyperplane | "
                        "hyperplane-spanning | codim3 | dual | "
                        "block-unitary-upb")
      ->required();
  construct->add_option("--n", n, "grade N");
  construct->add_option("--m", m, "single-particle dimension M");
  construct->add_option("--b", b, "c4 family parameter b > 0");
  construct->add_option("--k", k, "spanning parameter k (1 <= k <= M/2)");
  construct->add_option("--dims", dims, "party dimensions")->delimiter(',');
  construct->add_option("--seed", cfg.seed, "RNG seed");
  construct->add_option("--in", io.in, "input JSON (pad/dual)");
  construct->add_option("--out", io.out, "output path (default stdout)");
  construct->add_option("--format", io.format, "json | pretty");

  CLI::App* verify = app.add_subcommand(
      "verify", "verify a CandidateSet JSON; exit code carries the verdict");
  verify->add_option("--in", io.in, "CandidateSet JSON (default stdin)");
  verify->add_option("--out", io.out, "report path (default stdout)");
  verify->add_option("--format", io.format, "json | pretty");
  verify->add_option("--seed", cfg.seed, "search seed");
  verify->add_option("--restarts", cfg.restarts, "search restarts");
  verify->add_option("--max-iters", cfg.max_iters, "iterations per restart");
  verify->add_option("--tol-found", cfg.tol_found, "witness tolerance");
  verify->add_option("--tol-clear", cfg.tol_clear, "pass tolerance");

  std::string transform_kind;
  CLI::App* transform =
      app.add_subcommand("transform", "dual | slater-decompose | expand");
  transform->add_option("kind", transform_kind, "transform kind")->required();
  transform->add_option("--in", io.in, "input JSON (default stdin)");
  transform->add_option("--out", io.out, "output path (default stdout)");
  transform->add_option("--format", io.format, "json | pretty");

  CLI::App* bounds =
      app.add_subcommand("bounds", "dimension and cardinality bounds");
  bounds->add_option("--n", n, "grade N");
  bounds->add_option("--m", m, "single-particle dimension M");
  bounds->add_option("--dims", dims, "tensor party dimensions")
      ->delimiter(',');
  bounds->add_option("--out", io.out, "output path (default stdout)");
  bounds->add_option("--format", io.format, "json | pretty");

  CLI::App* demo = app.add_subcommand("demo", "small end-to-end tour");
  demo->add_option("--seed", cfg.seed, "search seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed())
      return run_construct(construct_name, n, m, b, k, dims, cfg.seed, io);
    if (verify->parsed()) return run_verify(cfg, io);
    if (transform->parsed()) return run_transform(transform_kind, io);
    if (bounds->parsed()) return run_bounds(n, m, dims, io);
    if (demo->parsed()) return run_demo(cfg.seed);
  } catch (const claim_violation& e) {
    std::cerr << "claim violation: " << e.what() << "\n";
    return kExitClaimViolation;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
