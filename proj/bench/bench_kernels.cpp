// Copyright 2026 The ciin-search Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "ciin/circuit.hpp"
#include "ciin/kernels.hpp"
#include "ciin/phase_walk.hpp"

namespace {

using namespace ciin;

Amplitudes filled(std::size_t dim) {
  Amplitudes a(dim);
  for (std::size_t i = 0; i < dim; ++i) a[i] = Complex(1.0 / (1.0 + static_cast<double>(i % 97)), 0.25);
  return a;
}

template <void (*Walk)(std::span<Complex>, std::size_t, double)>
void BM_Walk(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Amplitudes a = filled(2 * n);
  for (auto _ : state) {
    Walk(a, n, 0.37);
    benchmark::DoNotOptimize(a.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * n));
}

template <void (*H)(std::span<Complex>, unsigned)>
void BM_Hadamard(benchmark::State& state) {
  const auto wires = static_cast<unsigned>(state.range(0));
  Amplitudes a = filled(std::size_t{1} << wires);
  unsigned bit = 0;
  for (auto _ : state) {
    H(a, bit);
    bit = (bit + 1) % wires;
    benchmark::DoNotOptimize(a.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

template <void (*P)(std::span<Complex>, std::uint64_t, std::uint64_t, Complex)>
void BM_MaskedPhase(benchmark::State& state) {
  const auto wires = static_cast<unsigned>(state.range(0));
  Amplitudes a = filled(std::size_t{1} << wires);
  const std::uint64_t mask = (std::uint64_t{1} << wires) - 2;
  const Complex f = std::polar(1.0, 0.3);
  for (auto _ : state) {
    P(a, mask, 0, f);
    benchmark::DoNotOptimize(a.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

void BM_CompiledSearch(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const auto exec = state.range(1) ? Exec::Parallel : Exec::Serial;
  const auto size = GraphSize::from_side(std::size_t{1} << m);
  const auto circuit = compile_schedule(deterministic_schedule(size, deterministic_p_min(size)), m, 1);
  const FullState input = FullState::uniform(size);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(circuit, input, exec).amplitudes.data());
  state.counters["gates"] = static_cast<double>(circuit.gates.size());
}

BENCHMARK(BM_Walk<kernels::serial::walk>)->Name("walk/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_Walk<kernels::omp::walk>)->Name("walk/omp")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_Hadamard<kernels::serial::hadamard>)->Name("hadamard/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_Hadamard<kernels::omp::hadamard>)->Name("hadamard/omp")->DenseRange(12, 22, 5);
BENCHMARK(BM_MaskedPhase<kernels::serial::masked_phase>)->Name("masked_phase/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_MaskedPhase<kernels::omp::masked_phase>)->Name("masked_phase/omp")->DenseRange(12, 22, 5);
BENCHMARK(BM_CompiledSearch)->Name("compiled_search")->ArgsProduct({{8, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::AddCustomContext("omp_max_threads", std::to_string(omp_get_max_threads()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
