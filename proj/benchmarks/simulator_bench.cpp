// Copyright 2026 The qcloak Authors
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

#include "qcloak/bench.hpp"
#include "qcloak/simulator.hpp"

namespace {

void BM_IdealDistribution(benchmark::State& state) {
  qcloak::Circuit c = qcloak::gen_qft(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qcloak::ideal_distribution(c));
}
BENCHMARK(BM_IdealDistribution)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_Sample(benchmark::State& state) {
  qcloak::Circuit c = qcloak::gen_ghz(12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qcloak::sample(c, static_cast<std::size_t>(state.range(0)), 1));
  }
}
BENCHMARK(BM_Sample)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
