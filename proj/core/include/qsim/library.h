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

#ifndef QSIM_LIBRARY_H
#define QSIM_LIBRARY_H

#include <optional>
#include <string_view>

#include "qsim/circuit.h"

namespace qsim {

/// Deutsch's algorithm on two qubits: q0 feeds the oracle, q1 receives it.
/// Ops: X q0, X q1, H q0, H q1, oracle(f; q0 -> q1), H q0, measure q0 Z -> c0.
/// Constant f yields c0 = 1 and balanced f yields c0 = 0.
Circuit deutsch_circuit(const BooleanFunction &f);

/// X q0, X q1, H q0, CNOT q0 q1; ends in (|01> - |10>)/sqrt(2).
Circuit gk_entangler_circuit();

/// H q0 followed by a CNOT ladder; ends in (|0..0> + |1..1>)/sqrt(2).
Circuit ghz_circuit(size_t n);

/// Hadamards on q0..q_{n-1}, then oracle(f; q0..q_{n-1} -> q_n).
Circuit oracle_step_circuit(const BooleanFunction &f);

struct LibraryParams {
    std::optional<BooleanFunction> function;
    std::optional<size_t> n;
};

/// Name-based dispatch over the builders above: deutsch, gk_entangler, ghz, oracle_step.
Circuit build_library_circuit(std::string_view name, const LibraryParams &params = {});

}  // namespace qsim

#endif
