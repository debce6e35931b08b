/*
 * Copyright 2026 The intervalroc Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <random>

#include "intervalroc/pairwise.hpp"
#include "intervalroc/rates.hpp"

namespace intervalroc {
namespace {

ClassedIntervalDataset MakeData(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ClassedIntervalDataset d;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = u(rng) * 0.8 + 0.2, b = u(rng) * 0.8, w = u(rng) * 0.2;
    d.positives.emplace_back(a - w / 2, a + w / 2);
    d.negatives.emplace_back(b - w / 2, b + w / 2);
  }
  return d;
}

void BM_PairwiseCounts(benchmark::State& state) {
  const auto d = MakeData(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_counts(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PairwiseCounts)->RangeMultiplier(4)->Range(256, 1 << 20)->Complexity();

void BM_BruteForceCounts(benchmark::State& state) {
  const auto d = MakeData(state.range(0));
  for (auto _ : state) {
    std::uint64_t above = 0, below = 0;
    for (const auto& p : d.positives) {
      for (const auto& n : d.negatives) {
        above += p.lower() > n.upper();
        below += p.upper() < n.lower();
      }
    }
    benchmark::DoNotOptimize(above + below);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteForceCounts)->RangeMultiplier(4)->Range(256, 1 << 12)->Complexity();

void BM_BuildCurve(benchmark::State& state) {
  const auto d = MakeData(state.range(0));
  for (auto _ : state) {
    const auto c = build_curve(d, CurvePairing::kStrict);
    benchmark::DoNotOptimize(integrate_curve(c));
  }
}
BENCHMARK(BM_BuildCurve)->RangeMultiplier(8)->Range(512, 1 << 18);

}  // namespace
}  // namespace intervalroc

BENCHMARK_MAIN();
