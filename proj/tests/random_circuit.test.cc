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

#include "gtest/gtest.h"

#include "qsim/backends.h"

using namespace qsim;

TEST(random_clifford_circuit, shape) {
    auto c = random_clifford_circuit(5, 40, 1);
    ASSERT_EQ(c.n_qubits, 5u);
    ASSERT_EQ(c.ops.size(), 40u);
    ASSERT_TRUE(validate(c).empty());
    ASSERT_TRUE(classify_gottesman_knill(c).is_gk);
    ASSERT_FALSE(c.has_measurements());
    for (const auto &op : c.ops) {
        const auto &g = std::get<GateApp>(op);
        ASSERT_TRUE(is_clifford(g.kind));
        ASSERT_NE(g.kind, GateKind::kI);
        ASSERT_NE(g.kind, GateKind::kS);
        if (g.kind == GateKind::kCnot) {
            ASSERT_NE(g.targets[0], g.targets[1]);
        }
    }
}

TEST(random_clifford_circuit, deterministic_in_seed) {
    ASSERT_EQ(random_clifford_circuit(6, 30, 7), random_clifford_circuit(6, 30, 7));
    ASSERT_NE(random_clifford_circuit(6, 30, 7), random_clifford_circuit(6, 30, 8));
}

TEST(random_clifford_circuit, gate_mix) {
    auto c = random_clifford_circuit(4, 6000, 3);
    size_t cnot = 0;
    for (const auto &op : c.ops) {
        cnot += std::get<GateApp>(op).kind == GateKind::kCnot;
    }
    // One in six, 5 sigma.
    ASSERT_NEAR(static_cast<double>(cnot), 1000.0, 5 * std::sqrt(6000.0 * (1.0 / 6) * (5.0 / 6)));
}

TEST(random_clifford_circuit, bad_params) {
    ASSERT_THROW(random_clifford_circuit(1, 10, 0), Error);
    ASSERT_THROW(random_clifford_circuit(3, 0, 0), Error);
}

TEST(with_terminal_measurements, measures_every_qubit) {
    auto c = with_terminal_measurements(random_clifford_circuit(3, 10, 2));
    ASSERT_EQ(c.n_cbits, 3u);
    ASSERT_EQ(c.ops.size(), 13u);
    for (size_t q = 0; q < 3; q++) {
        const auto &m = std::get<Measure>(c.ops[10 + q]);
        ASSERT_EQ(m.qubit, q);
        ASSERT_EQ(m.cbit, q);
        ASSERT_EQ(m.axis, PauliAxis::kZ);
    }
    auto a = run_statevector(c, 200, 4);
    auto b = run_stabilizer(c, 200, 4);
    ASSERT_EQ(a.counts, b.counts);
}
