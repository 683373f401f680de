// Copyright 2026 The hyperwalk Authors.
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

#include "hyperwalk/generator.h"
#include "hyperwalk/spectral.h"
#include "hyperwalk/szegedy.h"

namespace hyperwalk {
namespace {

// d = 3, k = 4 instance with N = 3n.
Hypergraph Instance(int n) {
  return RandomRegularUniform({n, 3 * n / 4, 4, 3}, 42);
}

void BM_ApplyFactored(benchmark::State& state) {
  const Hypergraph hg = Instance(static_cast<int>(state.range(0)));
  const WalkModel model = BuildWalkModel(hg, Materialize::kNever);
  Eigen::VectorXcd psi = StateVector::VertexAnchored(model.walk.isometries(), 0)
                             .amplitudes();
  for (auto _ : state) {
    psi = model.walk.Apply(psi);
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetComplexityN(model.pair_space.dimension());
}
BENCHMARK(BM_ApplyFactored)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ApplyDense(benchmark::State& state) {
  const Hypergraph hg = Instance(static_cast<int>(state.range(0)));
  const WalkModel model = BuildWalkModel(hg, Materialize::kAlways);
  const Eigen::MatrixXcd w = model.walk.dense().cast<Complex>();
  Eigen::VectorXcd psi = StateVector::VertexAnchored(model.walk.isometries(), 0)
                             .amplitudes();
  for (auto _ : state) {
    psi = w * psi;
    benchmark::DoNotOptimize(psi.data());
  }
}
BENCHMARK(BM_ApplyDense)->RangeMultiplier(4)->Range(16, 1024);

void BM_BuildWalkModel(benchmark::State& state) {
  const Hypergraph hg = Instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildWalkModel(hg, Materialize::kNever));
  }
}
BENCHMARK(BM_BuildWalkModel)->RangeMultiplier(4)->Range(16, 4096);

void BM_PredictSpectrum(benchmark::State& state) {
  const Hypergraph hg = Instance(static_cast<int>(state.range(0)));
  const WalkModel model = BuildWalkModel(hg, Materialize::kNever);
  for (auto _ : state) {
    const SvdResult svd = FullSvd(ComputeDiscriminant(model.transitions));
    benchmark::DoNotOptimize(PredictSpectrum(svd, model.walk.isometries()));
  }
}
BENCHMARK(BM_PredictSpectrum)->RangeMultiplier(2)->Range(16, 128);

void BM_BruteForceSpectrum(benchmark::State& state) {
  const Hypergraph hg = Instance(static_cast<int>(state.range(0)));
  const WalkModel model = BuildWalkModel(hg, Materialize::kAlways);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeBruteForceSpectrum(model.walk, false));
  }
}
BENCHMARK(BM_BruteForceSpectrum)->RangeMultiplier(2)->Range(16, 128);

}  // namespace
}  // namespace hyperwalk

BENCHMARK_MAIN();
