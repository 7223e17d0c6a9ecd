// Copyright 2026 The qsim Authors
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

#include "benchmark/benchmark.h"

#include "qsim/backends.h"
#include "qsim/local_model.h"
#include "qsim/random_circuit.h"

using namespace qsim;

static void BM_statevector_random_clifford(benchmark::State &state) {
    size_t n = static_cast<size_t>(state.range(0));
    auto c = with_terminal_measurements(random_clifford_circuit(n, 100, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_statevector(c, 1, 1));
    }
}
BENCHMARK(BM_statevector_random_clifford)->DenseRange(10, 18, 2)->Unit(benchmark::kMillisecond);

static void BM_stabilizer_random_clifford(benchmark::State &state) {
    size_t n = static_cast<size_t>(state.range(0));
    auto c = with_terminal_measurements(random_clifford_circuit(n, 2 * n, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_stabilizer(c, 1, 1));
    }
}
BENCHMARK(BM_stabilizer_random_clifford)->RangeMultiplier(2)->Range(50, 800)->Unit(benchmark::kMillisecond);

static void BM_find_local_model_ghz3_one_bit(benchmark::State &state) {
    auto q = quantum_table(ghz_state(3), pauli_alphabets(3));
    auto topo = CommTopology::parse("2>1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_local_model(q, topo));
    }
}
BENCHMARK(BM_find_local_model_ghz3_one_bit)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
