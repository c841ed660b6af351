// Copyright 2026 The gridwd Authors
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

// Serial reference vs OpenMP sweep, and the per-call cost of the three
// distances on square grids.

#include <benchmark/benchmark.h>

#include "gridwd/mwd.h"
#include "gridwd/qmwd.h"
#include "gridwd/random.h"
#include "gridwd/sweep.h"
#include "gridwd/wd1d.h"

namespace {

using gridwd::GridHistogram;

std::pair<GridHistogram, GridHistogram> square_pair(std::size_t side) {
  const auto p = gridwd::gen_random_grid(side, side, gridwd::mix64(1), 9);
  const auto q = gridwd::gen_random_grid(side, side, gridwd::mix64(2), 9);
  return gridwd::equalize_mass(p, q, gridwd::mix64(3));
}

gridwd::SweepConfig sweep_config() {
  gridwd::SweepConfig cfg;
  cfg.timing_repeats = 1;
  return cfg;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto cfg = sweep_config();
  for (auto _ : state) benchmark::DoNotOptimize(gridwd::run_sweep_serial(cfg));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto cfg = sweep_config();
  for (auto _ : state) benchmark::DoNotOptimize(gridwd::run_sweep(cfg));
}
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_WdVec(benchmark::State& state) {
  const auto [p, q] = square_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gridwd::wd_1d(gridwd::vec_row_major(p), gridwd::vec_row_major(q)));
  }
}
BENCHMARK(BM_WdVec)->RangeMultiplier(2)->Range(8, 128);

void BM_Qmwd(benchmark::State& state) {
  const auto [p, q] = square_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gridwd::qmwd(p, q));
}
BENCHMARK(BM_Qmwd)->RangeMultiplier(2)->Range(8, 128);

void BM_MwdExact(benchmark::State& state) {
  const auto [p, q] = square_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gridwd::mwd_exact(p, q));
}
BENCHMARK(BM_MwdExact)->DenseRange(4, 20, 4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
