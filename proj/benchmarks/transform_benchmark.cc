// Copyright 2026 The qbluestein Authors
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

#include "qbluestein/qba.hpp"
#include "qbluestein/random.hpp"

namespace qbluestein {

static ComplexVec bench_input(std::size_t n) {
  Engine e = make_engine(1, n);
  return random_unit_vector(n, e);
}

static void BM_DftDirect(benchmark::State& state) {
  const ComplexVec x = bench_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dft_direct(x));
  }
  state.SetComplexityN(state.range(0));
}

static void BM_FftRadix2(benchmark::State& state) {
  const ComplexVec x = bench_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fft_radix2(x));
  }
  state.SetComplexityN(state.range(0));
}

static void BM_BluesteinClassical(benchmark::State& state) {
  const ComplexVec x = bench_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bluestein_classical(x));
  }
  state.SetComplexityN(state.range(0));
}

static void BM_RunQba(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ComplexVec x = bench_input(n);
  const BluesteinPlan plan = build_plan(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_qba(x, plan));
  }
  state.counters["qubits"] = plan.m + 1;
}

static void BM_BuildPlan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_plan(n));
  }
}

BENCHMARK(BM_DftDirect)->RangeMultiplier(4)->Range(8, 4096)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_FftRadix2)->RangeMultiplier(4)->Range(8, 1 << 16)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_BluesteinClassical)->Arg(7)->Arg(100)->Arg(1000)->Arg(4095)->Arg(10007);
BENCHMARK(BM_RunQba)->Arg(3)->Arg(6)->Arg(100)->Arg(1000)->Arg(10000);
BENCHMARK(BM_BuildPlan)->Arg(100)->Arg(10000);

}  // namespace qbluestein

BENCHMARK_MAIN();
