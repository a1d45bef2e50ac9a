// Copyright 2026 The s2pa-lab Authors
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

#include "s2pa/equilibria.hpp"
#include "s2pa/generators.hpp"
#include "s2pa/valuation.hpp"
#include "s2pa/welfare.hpp"

namespace {

using namespace s2pa;

void BM_OptimalAllocation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const auto instances = generate_instances(Family::xos_clauses, n, m, 11, 8);
  for (auto _ : state) {
    for (const auto& inst : instances) benchmark::DoNotOptimize(optimal_allocations(inst));
  }
}
BENCHMARK(BM_OptimalAllocation)->Args({2, 4})->Args({3, 6})->Args({4, 8})->Args({3, 10});

void BM_OptimalAllocationTables(benchmark::State& state) {
  const auto instances = generate_instances(Family::sm_table, 3, static_cast<int>(state.range(0)), 5, 8);
  for (auto _ : state) {
    for (const auto& inst : instances) benchmark::DoNotOptimize(optimal_allocations(inst));
  }
}
BENCHMARK(BM_OptimalAllocationTables)->Arg(3)->Arg(5)->Arg(6);

void BM_BestResponse(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto instances = generate_instances(Family::mon_table, 3, m, 3, 8);
  Rng rng(9);
  std::vector<BidProfile> bids;
  for (const auto& inst : instances) bids.push_back(random_bids(inst, rng));
  for (auto _ : state) {
    for (std::size_t k = 0; k < instances.size(); ++k) {
      benchmark::DoNotOptimize(best_response(instances[k], 0, bids[k], default_grid(instances[k])));
    }
  }
}
BENCHMARK(BM_BestResponse)->Arg(2)->Arg(4)->Arg(6);

void BM_AlphaStar(benchmark::State& state) {
  Rng rng(4);
  const ValuationSpec v = random_valuation(Family::alpha_table, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_star(v));
}
BENCHMARK(BM_AlphaStar)->Arg(3)->Arg(5)->Arg(6);

void BM_PneEnumeration(benchmark::State& state) {
  const auto instances = generate_instances(Family::ud, 2, 2, 1, 4);
  for (auto _ : state) {
    for (const auto& inst : instances) {
      BidGrid grid = default_grid(inst);
      grid.step = grid.step * 2;
      benchmark::DoNotOptimize(enumerate_pne(inst, grid));
    }
  }
}
BENCHMARK(BM_PneEnumeration)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
