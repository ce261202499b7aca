// Copyright 2026 The fuzzyica Authors
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

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "fuzzyica/ica.h"
#include "fuzzyica/instance_io.h"
#include "fuzzyica/lp_oracle.h"
#include "fuzzyica/necessity.h"
#include "fuzzyica/normal.h"
#include "fuzzyica/penalty.h"

namespace fuzzyica {
namespace {

void BM_NormalQuantile(benchmark::State& state) {
  double p = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(NormalQuantile(p));
    p = p < 0.98 ? p + 0.01 : 0.01;
  }
}
BENCHMARK(BM_NormalQuantile);

void BM_Reformulate(benchmark::State& state) {
  const PortfolioInstance instance = PaperExampleInstance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Reformulate(instance, {0.4, 0.4}));
  }
}
BENCHMARK(BM_Reformulate);

void BM_SolveExact(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  DeterministicLP lp;
  for (int j = 0; j < state.range(0); ++j) {
    lp.coefficients.push_back(u(rng));
    lp.upper_bounds.push_back(10.0);
  }
  lp.total_fund = 2.5 * static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SolveExact(lp));
}
BENCHMARK(BM_SolveExact)->Arg(5)->Arg(100)->Arg(10000);

void BM_BruteForce(benchmark::State& state) {
  const DeterministicLP lp = Reformulate(PaperExampleInstance(), {0.1, 0.1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(BruteForce(lp, static_cast<double>(state.range(0))));
  }
}
BENCHMARK(BM_BruteForce)->Arg(20)->Arg(10);

void BM_NecessityGeqFuzzy(benchmark::State& state) {
  const LRFuzzyNumber a(2, 3, 1, 1);
  const LRFuzzyNumber b(1.5, 2, 0.5, 1);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(NecessityGeqFuzzy(a, b, grid));
}
BENCHMARK(BM_NecessityGeqFuzzy)->Arg(1000)->Arg(10000);

void BM_Repair(benchmark::State& state) {
  const std::vector<double> x = {70, -3, 25, 60, 10};
  const std::vector<double> upper(5, 60.0);
  for (auto _ : state) benchmark::DoNotOptimize(Repair(x, 200.0, upper));
}
BENCHMARK(BM_Repair);

void BM_RunIca(benchmark::State& state) {
  const DeterministicLP lp = Reformulate(PaperExampleInstance(), {0.1, 0.1});
  IcaConfig cfg;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(RunIca(lp, PenaltyConfig{}, cfg));
  }
}
BENCHMARK(BM_RunIca)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fuzzyica

BENCHMARK_MAIN();
