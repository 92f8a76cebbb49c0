// Copyright 2026 The qmetric Authors
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

#include "qmetric/compare.h"
#include "qmetric/fuzzy.h"
#include "qmetric/gaussian.h"
#include "qmetric/solver.h"

namespace qmetric {
namespace {

void BM_OverlapClosedForm(benchmark::State& state) {
  const GaussianState a(0.3, 1.2), b(-1.1, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(OverlapClosedForm(a, b));
  }
}
BENCHMARK(BM_OverlapClosedForm);

void BM_OverlapQuadrature(benchmark::State& state) {
  const GaussianState a(0.3, 1.2), b(-1.1, 0.7);
  QuadratureConfig config;
  config.panels = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(OverlapQuadrature(a, b, config));
  }
}
BENCHMARK(BM_OverlapQuadrature)->Arg(256)->Arg(4096)->Arg(65536);

void BM_L2Distance(benchmark::State& state) {
  const GaussianState a(0.3, 1.2), b(0.3 + 1e-6, 1.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(L2Distance(a, b));
  }
}
BENCHMARK(BM_L2Distance);

void BM_IterateToFixedPoint(benchmark::State& state) {
  const AffineGaussianMap map(0.5, 0.0, 0.5, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(IterateToFixedPoint(map, GaussianState(4, 3)));
  }
}
BENCHMARK(BM_IterateToFixedPoint);

void BM_EstimateLipschitz(benchmark::State& state) {
  const AffineGaussianMap map(0.5, 0.0, 0.5, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        EstimateLipschitz(map, DefaultCertificationBox(), state.range(0), 0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateLipschitz)->Arg(1000)->Arg(10000);

void BM_TNormAudit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        AuditTNormAxioms(TNormKind::kLukasiewicz, state.range(0)));
  }
}
BENCHMARK(BM_TNormAudit)->Arg(21)->Arg(51);

void BM_BuildFeatureReport(benchmark::State& state) {
  const AffineGaussianMap map(0.5, 0.0, 0.5, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildFeatureReport(
        map, GaussianState(4, 3), GaussianState(0, 1), GaussianState(1, 1)));
  }
}
BENCHMARK(BM_BuildFeatureReport);

}  // namespace
}  // namespace qmetric

BENCHMARK_MAIN();
