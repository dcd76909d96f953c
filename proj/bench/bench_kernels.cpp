// Copyright 2026 The combilu Authors
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

// Serial reference kernels against the OpenMP kernels on the largest
// default sizes of each family. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "combilu/cigler_family.hpp"
#include "combilu/kernels.hpp"
#include "combilu/kt_family.hpp"
#include "combilu/lehmer_family.hpp"

namespace {

using combilu::FieldMatrix;

const FieldMatrix& workload(int which) {
  static const FieldMatrix kt = combilu::kt::kt_matrix(combilu::kt::KTConfig::symbolic(6));
  static const FieldMatrix lehmer =
      combilu::lehmer::lehmer_matrix(combilu::lehmer::LehmerConfig(12));
  static const FieldMatrix cigler = combilu::cigler::cigler1(10).matrix;
  switch (which) {
    case 0: return kt;
    case 1: return lehmer;
    default: return cigler;
  }
}

const char* workload_name(int which) {
  static const char* kNames[] = {"kt_s6", "lehmer_n12", "cigler1_n10"};
  return kNames[which];
}

template <bool kParallel>
void BM_LU(benchmark::State& state) {
  const FieldMatrix& m = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto lu = kParallel ? combilu::lu_decompose(m) : combilu::reference::lu_decompose(m);
    benchmark::DoNotOptimize(lu);
  }
  state.SetLabel(std::string(workload_name(static_cast<int>(state.range(0)))) +
                 (kParallel ? " threads=" + std::to_string(omp_get_max_threads()) : ""));
}

template <bool kParallel>
void BM_MatMul(benchmark::State& state) {
  const FieldMatrix& m = workload(static_cast<int>(state.range(0)));
  const auto lu = combilu::reference::lu_decompose(m);
  for (auto _ : state) {
    auto p = kParallel ? combilu::mat_mul(lu.lower, lu.upper)
                       : combilu::reference::mat_mul(lu.lower, lu.upper);
    benchmark::DoNotOptimize(p);
  }
  state.SetLabel(workload_name(static_cast<int>(state.range(0))));
}

template <bool kParallel>
void BM_Inverse(benchmark::State& state) {
  const FieldMatrix& m = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto inv = kParallel ? combilu::mat_inverse(m) : combilu::reference::mat_inverse(m);
    benchmark::DoNotOptimize(inv);
  }
  state.SetLabel(workload_name(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_LU<false>)->Name("lu/serial")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LU<true>)->Name("lu/openmp")->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MatMul<false>)->Name("mat_mul/serial")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatMul<true>)->Name("mat_mul/openmp")->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
// No Lehmer inverse: Gauss-Jordan over two variables without a multivariate
// gcd grows the entries too fast to be a useful timing.
BENCHMARK(BM_Inverse<false>)->Name("inverse/serial")->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Inverse<true>)->Name("inverse/openmp")->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
