// Copyright 2026 The qcontrol Authors
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

#include <numbers>

#include "qcontrol/qcontrol.hpp"

namespace {

using namespace qcontrol;

void BM_JacobiEigenvalues(benchmark::State& state) {
  Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  const DensityMatrix rho = random_density_matrix(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigenvalues(rho.matrix()));
  }
}
BENCHMARK(BM_JacobiEigenvalues)->Arg(1)->Arg(2)->Arg(3);

void BM_JacobiChoi16(benchmark::State& state) {
  const ChoiMatrix c = choi_matrix(compose(
      map_from_interaction(QubitLabel::A, RotationAxis::Z, 1.7),
      map_from_interaction(QubitLabel::B, RotationAxis::X, 0.4)));
  for (auto _ : state) benchmark::DoNotOptimize(c.min_eigenvalue());
}
BENCHMARK(BM_JacobiChoi16);

void BM_Concurrence(benchmark::State& state) {
  Rng rng(2);
  const DensityMatrix rho = random_density_matrix(2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(BM_Concurrence);

void BM_ApplyMap(benchmark::State& state) {
  Rng rng(3);
  const DensityMatrix rho = random_density_matrix(2, rng);
  const PauliScalingMap m = map_from_interaction(QubitLabel::A, RotationAxis::Z, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(apply_map(m, rho));
}
BENCHMARK(BM_ApplyMap);

void BM_FullCorrelatedState(benchmark::State& state) {
  double phi = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_correlated_state(BellSign::Plus, phi));
    phi += 1e-3;
  }
}
BENCHMARK(BM_FullCorrelatedState);

void BM_ConcurrenceSweep(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double sum = 0.0;
    for (int i = 0; i < steps; ++i) {
      const double phi = std::numbers::pi * i / (steps - 1);
      sum += concurrence(reduced_dynamics(
                             bell_state(BellSign::Plus),
                             {QubitLabel::A, QubitLabel::C, RotationAxis::Z, phi}))
                 .value;
    }
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_ConcurrenceSweep)->Arg(181);

void BM_SuddenDeathTime(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sudden_death_time(1.0, 0.37));
}
BENCHMARK(BM_SuddenDeathTime);

void BM_InvariantSuite(benchmark::State& state) {
  SuiteOptions o;
  o.random_states = 100;
  for (auto _ : state) benchmark::DoNotOptimize(run_invariant_suite(o));
}
BENCHMARK(BM_InvariantSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
