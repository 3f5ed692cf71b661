// Copyright 2026 The phasenoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "phasenoise/classical_witness.h"
#include "phasenoise/extremal.h"
#include "phasenoise/phase_noise.h"
#include "phasenoise/random.h"
#include "phasenoise/state_factories.h"
#include "phasenoise/tridiagonal.h"
#include "phasenoise/verify_identities.h"

namespace phasenoise {
namespace {

void BM_Moments(benchmark::State& state) {
  CounterRng rng(1, 0);
  const PureState s = haar_random_state(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(moments(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Moments)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_Report(benchmark::State& state) {
  const PureState s = triangle_state(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(report(s));
}
BENCHMARK(BM_Report)->Arg(100)->Arg(1000);

void BM_CoherentState(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coherent_state(r));
}
BENCHMARK(BM_CoherentState)->Arg(1)->Arg(4)->Arg(16)->Arg(40);

void BM_CoherentEMinus(benchmark::State& state) {
  const Complex alpha(static_cast<double>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(coherent_e_minus(alpha));
}
BENCHMARK(BM_CoherentEMinus)->Arg(1)->Arg(10);

void BM_TopEigenpair(benchmark::State& state) {
  const SymmetricTridiagonal t = lagrange_matrix(1e-4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(top_eigenpair(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TopEigenpair)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_MinimizePhaseNoise(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimize_phase_noise(dim / 4.0, dim));
}
BENCHMARK(BM_MinimizePhaseNoise)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  McOptions o;
  o.seed = 42;
  o.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mc_verify_classical(o));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace phasenoise

BENCHMARK_MAIN();
