// Copyright 2026 The IrrepForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "irrepforge/basis_enum.hpp"
#include "irrepforge/canonical.hpp"
#include "irrepforge/dfunc.hpp"

namespace irrepforge {
namespace {

IrrepLabel irrep_arg(const benchmark::State& state) {
  switch (state.range(0)) {
    case 0: return IrrepLabel({2, 2});
    case 1: return IrrepLabel({3, 1});
    case 2: return IrrepLabel({1, 0, 1});
    default: return IrrepLabel({2, 1, 1});
  }
}

int rank_arg(const benchmark::State& state) { return state.range(0) < 2 ? 3 : 4; }

void BM_BasisSet(benchmark::State& state) {
  const int n = rank_arg(state);
  const auto K = irrep_arg(state);
  const auto hws = build_hws(n, K);
  const auto chain = SubalgebraChain::canonical(n);
  for (auto _ : state) benchmark::DoNotOptimize(basis_set(n, hws, chain));
}
BENCHMARK(BM_BasisSet)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CanonicalBasis(benchmark::State& state) {
  const int n = rank_arg(state);
  const auto K = irrep_arg(state);
  const auto chain = SubalgebraChain::canonical(n);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_basis(n, K, chain));
}
BENCHMARK(BM_CanonicalBasis)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_DMatrixNumeric(benchmark::State& state) {
  const int n = rank_arg(state);
  const auto basis = canonical_basis(n, irrep_arg(state), SubalgebraChain::canonical(n));
  std::mt19937_64 rng(17);
  const ComplexMatrix V = random_special_unitary(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(d_matrix(basis, V));
}
BENCHMARK(BM_DMatrixNumeric)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_DFunctionSymbolic(benchmark::State& state) {
  const int n = rank_arg(state);
  const auto basis = canonical_basis(n, irrep_arg(state), SubalgebraChain::canonical(n));
  const auto& mid = basis.states[basis.size() / 2].label;
  for (auto _ : state) benchmark::DoNotOptimize(d_function_symbolic(basis, mid, mid));
}
BENCHMARK(BM_DFunctionSymbolic)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace irrepforge

BENCHMARK_MAIN();
