// Copyright 2026 The qfridge Authors
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

#include "qfridge/analytic.hpp"
#include "qfridge/circuit.hpp"
#include "qfridge/lindblad.hpp"
#include "qfridge/model.hpp"

namespace {

using namespace qfridge;

RefrigeratorModel canonical() {
  std::array<QubitSpec, 3> qubits = {QubitSpec{2.0, 1e-3, 50.0},
                                     QubitSpec{12.0, 1e-3, 150.0},
                                     QubitSpec{10.0, 1e-3, 300.0}};
  CouplingSpec c;
  c.g_tilde_ghz = 0.01;
  return build_model(qubits, c);
}

void BM_BuildLiouvillian(benchmark::State& state) {
  const RefrigeratorModel model = canonical();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_liouvillian(model));
  }
}
BENCHMARK(BM_BuildLiouvillian);

void BM_SteadyStateNullspace(benchmark::State& state) {
  const Liouvillian liou = build_liouvillian(canonical());
  for (auto _ : state) {
    benchmark::DoNotOptimize(steady_state_nullspace(liou));
  }
}
BENCHMARK(BM_SteadyStateNullspace);

void BM_GeneratorApply(benchmark::State& state) {
  const Liouvillian liou = build_liouvillian(canonical());
  Matrix rho = Matrix::Zero(kHilbertDim, kHilbertDim);
  rho(0, 0) = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(liou.apply(rho));
  }
}
BENCHMARK(BM_GeneratorApply);

void BM_AnalyticSteadyState(benchmark::State& state) {
  const RefrigeratorModel model = canonical();
  for (auto _ : state) {
    benchmark::DoNotOptimize(steady_populations(model));
  }
}
BENCHMARK(BM_AnalyticSteadyState);

void BM_AnharmonicSpectrum(benchmark::State& state) {
  CubicWellParams well;
  well.omega_ghz = 10.52;
  well.lambda_ghz = 11.937;
  well.mass_inv_ghz = 1.5496;
  well.barrier_ghz = 4.5 * well.omega_ghz;
  well.bound_levels = 4.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(anharmonic_spectrum(well, 32));
  }
}
BENCHMARK(BM_AnharmonicSpectrum);

}  // namespace

BENCHMARK_MAIN();
