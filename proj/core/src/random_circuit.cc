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

#include "qsim/random_circuit.h"

#include "qsim/error.h"
#include "qsim/rng.h"

namespace qsim {

Circuit random_clifford_circuit(size_t n, size_t depth, uint64_t seed) {
    if (n < 2) {
        throw Error(ErrorCode::kBadParams, "random circuits need at least two qubits");
    }
    if (depth < 1) {
        throw Error(ErrorCode::kBadParams, "random circuits need depth at least 1");
    }
    static constexpr GateKind kSingle[] = {GateKind::kX, GateKind::kY, GateKind::kZ, GateKind::kR, GateKind::kH};
    Rng rng(seed);
    Circuit c;
    c.n_qubits = n;
    c.ops.reserve(depth);
    for (size_t k = 0; k < depth; k++) {
        auto choice = rng.below(6);
        if (choice < 5) {
            c.ops.push_back(GateApp{kSingle[choice], {static_cast<size_t>(rng.below(n))}, std::nullopt});
        } else {
            auto a = static_cast<size_t>(rng.below(n));
            auto b = static_cast<size_t>(rng.below(n - 1));
            if (b >= a) {
                b++;
            }
            c.ops.push_back(GateApp{GateKind::kCnot, {a, b}, std::nullopt});
        }
    }
    return c;
}

Circuit with_terminal_measurements(Circuit circuit) {
    size_t base = circuit.n_cbits;
    for (size_t q = 0; q < circuit.n_qubits; q++) {
        circuit.ops.push_back(Measure{q, PauliAxis::kZ, base + q});
    }
    circuit.n_cbits = base + circuit.n_qubits;
    return circuit;
}

}  // namespace qsim
