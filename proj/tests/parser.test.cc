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

#include "qsim/parser.h"

#include "gtest/gtest.h"

#include "qsim/library.h"
#include "test_util.h"

using namespace qsim;

static ErrorCode parse_error(std::string_view text, size_t *line = nullptr) {
    try {
        parse_circuit(text);
    } catch (const Error &e) {
        if (line != nullptr) {
            *line = e.line().value_or(0);
        }
        return e.code();
    }
    ADD_FAILURE() << "expected a parse error for:\n" << text;
    return ErrorCode::kUnknownGate;
}

TEST(parse_circuit, gk_entangler) {
    auto c = parse_circuit("qubits 2\nx q0\nx q1\nh q0\ncnot q0 q1");
    ASSERT_EQ(c, gk_entangler_circuit());
    ASSERT_EQ(c.n_cbits, 0u);
}

TEST(parse_circuit, empty_program) {
    auto c = parse_circuit("qubits 1");
    ASSERT_EQ(c.n_qubits, 1u);
    ASSERT_TRUE(c.ops.empty());
}

TEST(parse_circuit, conditioned_gate) {
    auto c = parse_circuit("qubits 2\ncbits 1\nmeasure q0 Z -> c0\ncif c0 x q1");
    ASSERT_EQ(c.ops.size(), 2u);
    ASSERT_EQ(c.ops[0], CircuitOp(Measure{0, PauliAxis::kZ, 0}));
    ASSERT_EQ(c.ops[1], CircuitOp(GateApp{GateKind::kX, {1}, 0}));
}

TEST(parse_circuit, comments_case_and_spacing) {
    auto c = parse_circuit(
        "# header comment\n"
        "QUBITS 3   # trailing\n"
        "Cbits 2\n"
        "\n"
        "H   q0\n"
        "CNOT q0    q2\n"
        "Oracle 0110 q0 q2 -> q1\n"
        "MEASURE q1 y -> c1\n");
    ASSERT_EQ(c.n_qubits, 3u);
    ASSERT_EQ(c.n_cbits, 2u);
    ASSERT_EQ(c.ops.size(), 4u);
    ASSERT_EQ(c.ops[2], CircuitOp(OracleApp{BooleanFunction::from_bits("0110"), {0, 2}, 1}));
    ASSERT_EQ(c.ops[3], CircuitOp(Measure{1, PauliAxis::kY, 1}));
}

TEST(parse_circuit, errors_carry_line_numbers) {
    size_t line = 0;
    ASSERT_EQ(parse_error("qubits 2\nh q0\nfoo q1\n", &line), ErrorCode::kUnknownGate);
    ASSERT_EQ(line, 3u);
    ASSERT_EQ(parse_error("qubits 2\nh q0 q1\n", &line), ErrorCode::kArityMismatch);
    ASSERT_EQ(line, 2u);
    ASSERT_EQ(parse_error("qubits 2\n\n\nh q2\n", &line), ErrorCode::kIndexOutOfRange);
    ASSERT_EQ(line, 4u);
    ASSERT_EQ(parse_error("h q0\n", &line), ErrorCode::kMalformedHeader);
    ASSERT_EQ(line, 1u);
    ASSERT_EQ(parse_error("qubits 2\ncbits 1\ncif c0 x q1\n", &line), ErrorCode::kUndefinedConditionBit);
    ASSERT_EQ(line, 3u);
}

TEST(parse_circuit, header_errors) {
    ASSERT_EQ(parse_error(""), ErrorCode::kMalformedHeader);
    ASSERT_EQ(parse_error("qubits 0"), ErrorCode::kMalformedHeader);
    ASSERT_EQ(parse_error("qubits two"), ErrorCode::kMalformedHeader);
    ASSERT_EQ(parse_error("qubits 1\nh q0\ncbits 1"), ErrorCode::kMalformedHeader);
}

TEST(parse_circuit, other_errors) {
    ASSERT_EQ(parse_error("qubits 2\ncnot q0 q0"), ErrorCode::kArityMismatch);
    ASSERT_EQ(parse_error("qubits 2\noracle 011 q0 -> q1"), ErrorCode::kArityMismatch);
    ASSERT_EQ(parse_error("qubits 2\noracle 01 q0 -> q0"), ErrorCode::kArityMismatch);
    ASSERT_EQ(parse_error("qubits 1\ncbits 1\nmeasure q0 W -> c0"), ErrorCode::kSyntax);
    ASSERT_EQ(parse_error("qubits 1\ncbits 1\nmeasure q0 Z c0"), ErrorCode::kSyntax);
    ASSERT_EQ(parse_error("qubits 1\ncbits 1\nmeasure q0 Z -> c1"), ErrorCode::kIndexOutOfRange);
    ASSERT_EQ(parse_error("qubits 1\nh 0"), ErrorCode::kSyntax);
}

TEST(parse_circuit, round_trip_property) {
    Rng rng(2024);
    for (size_t trial = 0; trial < 300; trial++) {
        size_t n = 1 + rng.below(6);
        auto c = gen::random_circuit(n, rng.below(30), rng);
        auto text = to_text(c);
        auto back = parse_circuit(text);
        ASSERT_EQ(back, c) << text;
        ASSERT_EQ(to_text(back), text);
    }
}

TEST(load_circuit_file, missing_file) {
    try {
        load_circuit_file("/nonexistent/definitely_missing.qc");
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::kIoError);
    }
}
