// Copyright 2026 The foldres Authors
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

#include <vector>

#include "foldres/feasibility.hpp"
#include "foldres/instances.hpp"
#include "foldres/oracle.hpp"
#include "foldres/report.hpp"
#include "foldres/table_estimator.hpp"
#include "foldres/turn_estimator.hpp"

namespace {

using namespace foldres;

CardinalityVector sampled(unsigned n) {
  auto rng = derive_stream(1, n, 0);
  return sample_sidechain_instance(n, 2, 100, rng);
}

void BM_EstimateBinary(benchmark::State& state) {
  const auto confs = sampled(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto est = estimate(confs, Encoding::binary());
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_EstimateBinary)->RangeMultiplier(2)->Range(4, 128);

void BM_EstimateBlockUnaryBinary(benchmark::State& state) {
  const auto confs = sampled(static_cast<unsigned>(state.range(0)));
  const auto enc = Encoding::block_unary_binary(3);
  for (auto _ : state) {
    auto est = estimate(confs, enc);
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_EstimateBlockUnaryBinary)->RangeMultiplier(2)->Range(4, 128);

void BM_TurnEstimate(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto b = turn_estimate(n, 3, Encoding::binary());
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_TurnEstimate)->Arg(10)->Arg(50)->Arg(100)->Arg(300);

void BM_FeasibleExact(benchmark::State& state) {
  // Three residues of c = 2^k - 1 under Binary: 3k qubits.
  const auto k = static_cast<std::uint64_t>(state.range(0));
  const std::uint64_t c = (std::uint64_t{1} << k) - 1;
  const CardinalityVector confs({c, c, c});
  for (auto _ : state) {
    auto r = feasible_ratio_exact(confs, Encoding::binary(), 24);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(static_cast<std::int64_t>(std::uint64_t{1} << (3 * k)));
}
BENCHMARK(BM_FeasibleExact)->DenseRange(2, 6)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);

void BM_OracleCensus(benchmark::State& state) {
  const auto c = static_cast<std::uint64_t>(state.range(0));
  const CardinalityVector confs({c, c, c});
  for (auto _ : state) {
    auto census = census_dense_pairwise(confs, Encoding::binary());
    benchmark::DoNotOptimize(census);
  }
}
BENCHMARK(BM_OracleCensus)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_EnumerateGrids(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto grids = enumerate_grids(n, 3);
    benchmark::DoNotOptimize(grids);
  }
}
BENCHMARK(BM_EnumerateGrids)->Arg(15)->Arg(100)->Arg(1000);

void BM_SideChainSweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.models = {Model::SideChain};
  cfg.encodings = {Encoding::unary(), Encoding::binary(), Encoding::block_unary_binary(3)};
  cfg.n_min = 3;
  cfg.n_max = 100;
  cfg.samples = static_cast<std::uint64_t>(state.range(0));
  cfg.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto rows = run_sweep(cfg);
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_SideChainSweep)
    ->Args({100, 1})
    ->Args({100, 4})
    ->Args({500, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
