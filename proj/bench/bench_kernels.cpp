// Copyright 2026 The qbitsim Authors
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

// Serial versus OpenMP kernels on registers of 16 to 24 Qbits.

#include <benchmark/benchmark.h>

#include <vector>

#include "qbitsim/gates.hpp"
#include "qbitsim/kernels.hpp"

namespace {

using qbitsim::Complex;
namespace kernels = qbitsim::kernels;

std::vector<Complex> make_state(unsigned n) {
  std::vector<Complex> s(std::size_t{1} << n, Complex{0.0});
  s[0] = 1.0;
  return s;
}

template <auto Kernel>
void bm_1q(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  auto s = make_state(n);
  for (auto _ : st) {
    Kernel(s, n / 2, qbitsim::matrices::kH);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations()) * static_cast<std::int64_t>(s.size()));
}

template <auto Kernel>
void bm_controlled(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  auto s = make_state(n);
  for (auto _ : st) {
    Kernel(s, n - 1, 0, qbitsim::matrices::kH);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations()) * static_cast<std::int64_t>(s.size()));
}

template <auto Kernel>
void bm_two(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  auto s = make_state(n);
  for (auto _ : st) {
    Kernel(s, n - 1, 1);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations()) * static_cast<std::int64_t>(s.size()));
}

}  // namespace

BENCHMARK(bm_1q<kernels::serial::apply_1q>)->Name("1q/serial")->DenseRange(16, 24, 4);
BENCHMARK(bm_1q<kernels::parallel::apply_1q>)->Name("1q/parallel")->DenseRange(16, 24, 4)->UseRealTime();
BENCHMARK(bm_controlled<kernels::serial::apply_controlled_1q>)->Name("controlled/serial")->DenseRange(16, 24, 4);
BENCHMARK(bm_controlled<kernels::parallel::apply_controlled_1q>)->Name("controlled/parallel")->DenseRange(16, 24, 4)->UseRealTime();
BENCHMARK(bm_two<kernels::serial::apply_cnot>)->Name("cnot/serial")->DenseRange(16, 24, 4);
BENCHMARK(bm_two<kernels::parallel::apply_cnot>)->Name("cnot/parallel")->DenseRange(16, 24, 4)->UseRealTime();
BENCHMARK(bm_two<kernels::serial::apply_swap>)->Name("swap/serial")->DenseRange(16, 24, 4);
BENCHMARK(bm_two<kernels::parallel::apply_swap>)->Name("swap/parallel")->DenseRange(16, 24, 4)->UseRealTime();

BENCHMARK_MAIN();
