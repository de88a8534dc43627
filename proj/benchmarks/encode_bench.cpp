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

#include "qcloak/analysis.hpp"
#include "qcloak/bench.hpp"
#include "qcloak/pipeline.hpp"

namespace {

void BM_Encode(benchmark::State& state) {
  qcloak::Circuit c = qcloak::gen_qft(static_cast<std::size_t>(state.range(0)));
  qcloak::PipelineConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(qcloak::encode(c, cfg));
}
BENCHMARK(BM_Encode)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Baseline(benchmark::State& state) {
  qcloak::Circuit c = qcloak::gen_qft(static_cast<std::size_t>(state.range(0)));
  qcloak::PipelineConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(qcloak::make_baseline(c, cfg.baseline_synth()));
}
BENCHMARK(BM_Baseline)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
