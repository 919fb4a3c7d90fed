// Copyright 2026 The imkit Authors
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


#include <benchmark/benchmark.h>

#include "imkit/imkit.hpp"
#include "imkit/random.hpp"

using namespace imkit;

namespace {

void BM_GeometricImaginarity(benchmark::State &state) {
    random::Rng rng(1);
    const DensityMatrix rho = random::density_matrix(state.range(0), rng);
    for (auto _ : state) benchmark::DoNotOptimize(geometric_imaginarity(rho));
}
BENCHMARK(BM_GeometricImaginarity)->RangeMultiplier(2)->Range(2, 32);

void BM_Takagi(benchmark::State &state) {
    random::Rng rng(2);
    const ComplexMatrix g = random::ginibre(state.range(0), state.range(0), rng);
    const ComplexMatrix s = g + g.transpose().eval();
    for (auto _ : state) benchmark::DoNotOptimize(takagi(s));
}
BENCHMARK(BM_Takagi)->RangeMultiplier(2)->Range(2, 32);

void BM_ConjugateOrthogonal(benchmark::State &state) {
    random::Rng rng(3);
    const DensityMatrix rho = random::density_matrix(state.range(0), rng);
    for (auto _ : state) benchmark::DoNotOptimize(conjugate_orthogonal_decomposition(rho));
}
BENCHMARK(BM_ConjugateOrthogonal)->RangeMultiplier(2)->Range(2, 16);

void BM_EqualImaginarity(benchmark::State &state) {
    random::Rng rng(4);
    const DensityMatrix rho = random::density_matrix(state.range(0), rng);
    for (auto _ : state) benchmark::DoNotOptimize(equal_imaginarity_decomposition(rho));
}
BENCHMARK(BM_EqualImaginarity)->RangeMultiplier(2)->Range(2, 16);

void BM_ApproxProb(benchmark::State &state) {
    random::Rng rng(5);
    const PureState psi = random::pure_state(state.range(0), rng);
    const DensityMatrix rho = random::density_matrix(state.range(0), rng);
    for (auto _ : state) benchmark::DoNotOptimize(approx_prob(psi, rho, 0.9));
}
BENCHMARK(BM_ApproxProb)->Arg(2)->Arg(8);

void BM_FeasibilityAlpha(benchmark::State &state) {
    random::Rng rng(6);
    const DensityMatrix rho = random::density_matrix(state.range(0), rng);
    const DensityMatrix sigma = random::density_matrix(state.range(0), rng);
    for (auto _ : state) benchmark::DoNotOptimize(feasibility_alpha(rho, sigma));
}
BENCHMARK(BM_FeasibilityAlpha)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_OptimalFidelity(benchmark::State &state) {
    random::Rng rng(7);
    const DensityMatrix rho = random::density_matrix(state.range(0), rng);
    const PureState psi = random::pure_state(state.range(0), rng);
    for (auto _ : state) benchmark::DoNotOptimize(optimal_fidelity_pure_target(rho, psi, 0.5));
}
BENCHMARK(BM_OptimalFidelity)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
