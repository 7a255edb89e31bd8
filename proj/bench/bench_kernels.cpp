// Copyright 2026 The gcx Authors
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

// Serial reference kernels against their OpenMP counterparts. Set
// GCX_THREADS to cap the parallel worker count.

#include <benchmark/benchmark.h>

#include <random>

#include "gcx/graph_complex.hpp"
#include "gcx/intlinalg.hpp"
#include "gcx/strata.hpp"

namespace {

using gcx::Execution;

Execution Mode(const benchmark::State& state) {
  return state.range(0) ? Execution::kParallel : Execution::kSerial;
}

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gcx::EnumerateGenerators(5, 11, true, Mode(state)).size());
  }
}
BENCHMARK(BM_Enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Boundary(benchmark::State& state) {
  const auto source = gcx::GraphBasis::Enumerate(5, 10, gcx::Parity::kOdd, true);
  const auto target = gcx::GraphBasis::Enumerate(4, 9, gcx::Parity::kOdd, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gcx::BoundaryMatrix(source, target, Mode(state)).nonzeros());
  }
}
BENCHMARK(BM_Boundary)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Smith(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  gcx::SparseIntMatrix m(80, 80);
  for (std::size_t i = 0; i < 80; ++i) {
    for (std::size_t j = 0; j < 80; ++j) {
      if (rng() % 4 == 0) m.Set(i, j, entry(rng));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcx::SmithNormalForm(m, Mode(state)).rank);
  }
}
BENCHMARK(BM_Smith)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Audit(benchmark::State& state) {
  const gcx::DirectedOrderedGraph k4(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gcx::CancellationAudit(k4, gcx::Parity::kEven, 4,
                               gcx::SgnPrimeMode::kLiteral, Mode(state))
            .records.size());
  }
}
BENCHMARK(BM_Audit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
