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
#include <benchmark/benchmark.h>

#include <fermiupb/plucker.hpp>
#include <fermiupb/rng.hpp>
#include <fermiupb/search.hpp>
#include <fermiupb/verify.hpp>

using namespace fupb;

namespace {

Factorization<Cx> sample_factorization(int m, int n, std::uint64_t seed) {
  SplitMix rng(seed, 0);
  std::vector<Vec<Cx>> f(n, Vec<Cx>(m));
  for (auto& v : f)
    for (auto& x : v) x = rng.next_complex_normal();
  return Factorization<Cx>(m, std::move(f));
}

void BM_WedgeExpand(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  auto f = sample_factorization(m, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(wedge_expand(f));
}
BENCHMARK(BM_WedgeExpand)->Args({4, 2})->Args({6, 3})->Args({8, 4});

void BM_PluckerResidual(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  NVector<Cx> psi = wedge_expand(sample_factorization(m, n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(plucker_residual(psi));
}
BENCHMARK(BM_PluckerResidual)->Args({4, 2})->Args({6, 3});

void BM_SearchRestart(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  auto v = vandermonde_gfupb(n, m);
  std::vector<NVector<Cx>> exp;
  for (const auto& f : v.members) exp.push_back(to_float(wedge_expand(f)));
  Subspace<Cx> comp = Subspace<Cx>(m, n, exp).orthogonal_complement();
  SearchConfig cfg;
  cfg.restarts = 1;
  cfg.max_iters = 500;
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_decomposable(comp, cfg));
    ++cfg.seed;
  }
}
BENCHMARK(BM_SearchRestart)->Args({5, 2})->Args({6, 3});

void BM_VerifyC4(benchmark::State& state) {
  auto s = fupb_c4(c4_reference_params());
  SearchConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(verify_candidate(s, cfg));
}
BENCHMARK(BM_VerifyC4);

}  // namespace

BENCHMARK_MAIN();
