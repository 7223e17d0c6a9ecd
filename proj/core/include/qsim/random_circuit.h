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

#ifndef QSIM_RANDOM_CIRCUIT_H
#define QSIM_RANDOM_CIRCUIT_H

#include <cstddef>
#include <cstdint>

#include "qsim/circuit.h"

namespace qsim {

/// Exactly `depth` ops, each drawn uniformly from {X, Y, Z, R, H on a random
/// qubit; CNOT on a random ordered pair of distinct qubits}. Requires n >= 2
/// and depth >= 1.
Circuit random_clifford_circuit(size_t n, size_t depth, uint64_t seed);

/// Appends a Z measurement of every qubit q into classical bit q.
Circuit with_terminal_measurements(Circuit circuit);

}  // namespace qsim

#endif
