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

#include "intervalroc/bootstrap.hpp"
#include "intervalroc/synthetic.hpp"
#include "intervalroc/tabular.hpp"

namespace intervalroc {
namespace {

void BM_BootstrapPima(benchmark::State& state) {
  const auto data = load_csv(std::string(INTERVALROC_DATA_DIR) + "/pima-indians-diabetes.csv");
  const auto split = stratified_split(data, 0.3, 42);
  BootstrapOptions opt;
  opt.replicates = state.range(0);
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(bootstrap_predict(split.train, split.test, opt));
}
BENCHMARK(BM_BootstrapPima)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SyntheticValidation(benchmark::State& state) {
  SyntheticConfig cfg;
  cfg.n_per_class = state.range(0);
  const std::vector<double> alphas = {0.01, 0.05, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(validate_bounds(cfg, alphas));
}
BENCHMARK(BM_SyntheticValidation)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace intervalroc
