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

#include "qsim/gates.h"

#include "gtest/gtest.h"

using namespace qsim;

static double unitarity_defect(GateKind kind) {
    auto u = gate_matrix(kind);
    auto p = multiply(adjoint(u), u);
    double worst = 0;
    for (size_t r = 0; r < p.dim; r++) {
        for (size_t c = 0; c < p.dim; c++) {
            worst = std::max(worst, std::abs(p(r, c) - Complex(r == c ? 1 : 0)));
        }
    }
    return worst;
}

TEST(gates, matrices_are_unitary) {
    for (auto kind : kAllGateKinds) {
        ASSERT_LT(unitarity_defect(kind), 1e-15) << gate_name(kind);
    }
}

TEST(gates, arity) {
    for (auto kind : kAllGateKinds) {
        ASSERT_EQ(gate_arity(kind), kind == GateKind::kCnot ? 2u : 1u);
        ASSERT_EQ(gate_matrix(kind).dim, kind == GateKind::kCnot ? 4u : 2u);
    }
}

TEST(gates, clifford_flags) {
    for (auto kind : kAllGateKinds) {
        ASSERT_EQ(is_clifford(kind), kind != GateKind::kS) << gate_name(kind);
    }
}

TEST(gates, phase_gates) {
    auto r = gate_matrix(GateKind::kR);
    ASSERT_EQ(r(0, 0), Complex(1, 0));
    ASSERT_EQ(r(1, 1), Complex(0, 1));
    ASSERT_EQ(r(0, 1), Complex(0, 0));
    auto s = gate_matrix(GateKind::kS);
    ASSERT_NEAR(std::abs(s(1, 1) - std::polar(1.0, M_PI / 4)), 0, 1e-15);
    auto s2 = multiply(s, s);
    ASSERT_NEAR(std::abs(s2(1, 1) - Complex(0, 1)), 0, 1e-15);
}

TEST(gates, y_takes_zero_to_i_one) {
    auto y = gate_matrix(GateKind::kY);
    ASSERT_EQ(y(1, 0), Complex(0, 1));
    ASSERT_EQ(y(0, 0), Complex(0, 0));
}

TEST(gates, cnot_control_is_first_factor) {
    auto m = gate_matrix(GateKind::kCnot);
    // |11> -> |10>
    ASSERT_EQ(m(2, 3), Complex(1, 0));
    ASSERT_EQ(m(3, 2), Complex(1, 0));
    ASSERT_EQ(m(0, 0), Complex(1, 0));
    ASSERT_EQ(m(1, 1), Complex(1, 0));
}

TEST(gates, names_round_trip) {
    for (auto kind : kAllGateKinds) {
        ASSERT_EQ(gate_from_name(gate_name(kind)), kind);
    }
    ASSERT_EQ(gate_from_name("CNOT"), GateKind::kCnot);
    ASSERT_EQ(gate_from_name("t"), std::nullopt);
    for (auto axis : kAllPauliAxes) {
        ASSERT_EQ(axis_from_name(std::string(1, axis_name(axis))), axis);
    }
    ASSERT_EQ(axis_from_name("y"), PauliAxis::kY);
    ASSERT_EQ(axis_from_name("W"), std::nullopt);
}
