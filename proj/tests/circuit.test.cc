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

#include "qsim/circuit.h"

#include "gtest/gtest.h"

#include "qsim/library.h"

using namespace qsim;

TEST(boolean_function, table) {
    auto f = BooleanFunction::from_bits("0110");
    ASSERT_EQ(f.arity(), 2u);
    ASSERT_FALSE(f(0));
    ASSERT_TRUE(f(1));
    ASSERT_TRUE(f(2));
    ASSERT_FALSE(f(3));
    ASSERT_EQ(f.to_bits(), "0110");
}

TEST(boolean_function, rejects_bad_tables) {
    ASSERT_THROW(BooleanFunction::from_bits("011"), Error);
    ASSERT_THROW(BooleanFunction::from_bits(""), Error);
    ASSERT_THROW(BooleanFunction::from_bits("0120"), Error);
    ASSERT_THROW(BooleanFunction(1, {0, 2}), Error);
}

TEST(validate, builders_are_valid) {
    ASSERT_TRUE(validate(gk_entangler_circuit()).empty());
    ASSERT_TRUE(validate(ghz_circuit(5)).empty());
    ASSERT_TRUE(validate(deutsch_circuit(BooleanFunction::from_bits("10"))).empty());
    ASSERT_TRUE(validate(oracle_step_circuit(BooleanFunction::from_bits("00010111"))).empty());
}

TEST(validate, index_out_of_range) {
    Circuit c{1, 0, {GateApp{GateKind::kCnot, {0, 1}, std::nullopt}}};
    auto d = validate(c);
    ASSERT_EQ(d.size(), 1u);
    ASSERT_EQ(d[0].op_index, 0u);
    ASSERT_EQ(d[0].code, ErrorCode::kIndexOutOfRange);
}

TEST(validate, undefined_condition_bit) {
    Circuit c{2, 1, {GateApp{GateKind::kX, {1}, 0}}};
    auto d = validate(c);
    ASSERT_EQ(d.size(), 1u);
    ASSERT_EQ(d[0].code, ErrorCode::kUndefinedConditionBit);

    c.ops.insert(c.ops.begin(), Measure{0, PauliAxis::kZ, 0});
    ASSERT_TRUE(validate(c).empty());

    // The measurement must come first.
    std::swap(c.ops[0], c.ops[1]);
    ASSERT_EQ(validate(c).at(0).code, ErrorCode::kUndefinedConditionBit);
}

TEST(validate, arity_and_duplicates) {
    Circuit c{2, 0, {GateApp{GateKind::kH, {0, 1}, std::nullopt}}};
    ASSERT_EQ(validate(c).at(0).code, ErrorCode::kArityMismatch);
    c.ops = {GateApp{GateKind::kCnot, {1, 1}, std::nullopt}};
    ASSERT_EQ(validate(c).at(0).code, ErrorCode::kDuplicateQubit);
    c.ops = {OracleApp{BooleanFunction::from_bits("01"), {0}, 0}};
    ASSERT_EQ(validate(c).at(0).code, ErrorCode::kDuplicateQubit);
    c.ops = {OracleApp{BooleanFunction::from_bits("0110"), {0}, 1}};
    ASSERT_EQ(validate(c).at(0).code, ErrorCode::kArityMismatch);
}

TEST(validate, measurement_destination) {
    Circuit c{1, 1, {Measure{0, PauliAxis::kZ, 1}}};
    ASSERT_EQ(validate(c).at(0).code, ErrorCode::kIndexOutOfRange);
    ASSERT_THROW(require_valid(c), Error);
}

TEST(classify_gottesman_knill, examples) {
    auto gk = classify_gottesman_knill(gk_entangler_circuit());
    ASSERT_TRUE(gk.is_gk);
    ASSERT_EQ(gk.first_offender, std::nullopt);

    Circuit c{2, 0, {}};
    ASSERT_TRUE(classify_gottesman_knill(c).is_gk);

    c.ops = {GateApp{GateKind::kH, {0}, std::nullopt}, GateApp{GateKind::kCnot, {0, 1}, std::nullopt},
             GateApp{GateKind::kR, {1}, std::nullopt}, GateApp{GateKind::kS, {0}, std::nullopt},
             GateApp{GateKind::kS, {1}, std::nullopt}};
    auto r = classify_gottesman_knill(c);
    ASSERT_FALSE(r.is_gk);
    ASSERT_EQ(r.first_offender, 3u);

    auto d = classify_gottesman_knill(deutsch_circuit(BooleanFunction::from_bits("00")));
    ASSERT_FALSE(d.is_gk);
    ASSERT_EQ(d.first_offender, 4u);
}

TEST(classify_gottesman_knill, conditioned_cliffords_and_measurements_are_allowed) {
    Circuit c{2, 1, {Measure{0, PauliAxis::kY, 0}, GateApp{GateKind::kH, {1}, 0}, Measure{1, PauliAxis::kX, 0}}};
    ASSERT_TRUE(classify_gottesman_knill(c).is_gk);
}
