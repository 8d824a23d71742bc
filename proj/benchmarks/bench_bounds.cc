// Copyright 2026 The qinstr Authors
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

#include "qinstr/bounds.h"
#include "qinstr/entropy.h"
#include "qinstr/randgen.h"
#include "qinstr/suite.h"

namespace qinstr {
namespace {

void BM_HermitianEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ComplexMatrix m = RandomState(n, n, 1).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(HermitianEig(m));
}
BENCHMARK(BM_HermitianEig)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_RelativeEntropy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DensityMatrix rho = RandomState(n, n, 2);
  DensityMatrix phi = RandomState(n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(QuantumRelativeEntropy(rho, phi));
}
BENCHMARK(BM_RelativeEntropy)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_RandomInstrument(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(RandomInstrument(n, 3, 2, seed++));
}
BENCHMARK(BM_RandomInstrument)->Arg(2)->Arg(4)->Arg(8);

void BM_HolevoChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Ensemble ens = RandomEnsemble(n, 4, false, 4);
  Instrument instr = RandomInstrument(n, 3, 2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(HolevoChain(ens, instr));
}
BENCHMARK(BM_HolevoChain)->Arg(2)->Arg(4)->Arg(8);

void BM_ScutaruChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Ensemble ens = RandomEnsemble(n, 4, false, 5);
  Instrument instr = RandomInstrument(n, 3, 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(ScutaruChain(ens, instr));
}
BENCHMARK(BM_ScutaruChain)->Arg(2)->Arg(4)->Arg(8);

void BM_OzawaCheck(benchmark::State& state) {
  Instrument instr = RandomInstrument(3, 3, 1, 6);
  for (auto _ : state) benchmark::DoNotOptimize(OzawaCheck(instr, 50, 6));
}
BENCHMARK(BM_OzawaCheck);

void BM_SweepInstance(benchmark::State& state) {
  SweepConfig config;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(EvaluateSweepInstance(config, i++));
}
BENCHMARK(BM_SweepInstance);

}  // namespace
}  // namespace qinstr

BENCHMARK_MAIN();
