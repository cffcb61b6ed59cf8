// Copyright 2026 The swapchain authors.
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

#include "swapchain/analysis.hpp"
#include "swapchain/experiment.hpp"
#include "swapchain/noise.hpp"
#include "swapchain/protocol.hpp"
#include "swapchain/rng.hpp"

using namespace swapchain;

static void BM_RunChain(benchmark::State& state) {
  const int n_pairs = static_cast<int>(state.range(0));
  const NoiseModel noise = NoiseModel::shared(n_pairs, 0.02, 0.9, 0.05);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_chain(n_pairs, noise));
  }
}
BENCHMARK(BM_RunChain)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ApplyBsm(benchmark::State& state) {
  const ChainState chain = chain_initial(3);
  const DensityMatrix rho = projector(chain.pure);
  const BsmSpec spec{2, 3, {Diag::Plus, Diag::Plus}, 0.9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_bsm(rho, spec));
  }
}
BENCHMARK(BM_ApplyBsm);

static void BM_SimulateCounts(benchmark::State& state) {
  const Matrix rho = werner(0.6);
  const std::int64_t events = state.range(0);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_counts(rho, {Axis::X, Axis::X}, events, 0.0, seed++));
  }
  state.SetItemsProcessed(state.iterations() * events);
}
BENCHMARK(BM_SimulateCounts)->Arg(1000)->Arg(100000);

static void BM_MleReconstruct(benchmark::State& state) {
  Rng rng(5);
  const Matrix rho = random_density_matrix(rng, 4);
  std::vector<SettingOutcome> counts;
  for (Setting s : tomography_settings())
    counts.push_back(simulate_counts(rho, s, state.range(0), 0.0,
                                     derive_seed(17, setting_label(s))));
  MleOptions options;
  options.bootstrap_resamples = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mle_reconstruct(counts, options));
  }
}
BENCHMARK(BM_MleReconstruct)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_Concurrence(benchmark::State& state) {
  Rng rng(6);
  const Matrix rho = random_density_matrix(rng, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence(rho));
  }
}
BENCHMARK(BM_Concurrence);

static void BM_PaperPreset(benchmark::State& state) {
  ExperimentPreset preset = get_preset("paper");
  std::uint64_t seed = 1;
  for (auto _ : state) {
    preset.seed = seed++;
    benchmark::DoNotOptimize(run_preset(preset));
  }
}
BENCHMARK(BM_PaperPreset)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
