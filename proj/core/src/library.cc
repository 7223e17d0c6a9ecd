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

#include "qsim/library.h"

#include <string>

namespace qsim {

namespace {

GateApp gate(GateKind kind, std::vector<size_t> targets) {
    return GateApp{kind, std::move(targets), std::nullopt};
}

}  // namespace

Circuit deutsch_circuit(const BooleanFunction &f) {
    if (f.arity() != 1) {
        throw Error(ErrorCode::kBadParams, "deutsch needs a one-bit function, got arity " + std::to_string(f.arity()));
    }
    Circuit c;
    c.n_qubits = 2;
    c.n_cbits = 1;
    c.ops = {
        gate(GateKind::kX, {0}),
        gate(GateKind::kX, {1}),
        gate(GateKind::kH, {0}),
        gate(GateKind::kH, {1}),
        OracleApp{f, {0}, 1},
        gate(GateKind::kH, {0}),
        Measure{0, PauliAxis::kZ, 0},
    };
    return c;
}

Circuit gk_entangler_circuit() {
    Circuit c;
    c.n_qubits = 2;
    c.ops = {
        gate(GateKind::kX, {0}),
        gate(GateKind::kX, {1}),
        gate(GateKind::kH, {0}),
        gate(GateKind::kCnot, {0, 1}),
    };
    return c;
}

Circuit ghz_circuit(size_t n) {
    if (n < 2) {
        throw Error(ErrorCode::kBadParams, "ghz needs n >= 2");
    }
    Circuit c;
    c.n_qubits = n;
    c.ops.push_back(gate(GateKind::kH, {0}));
    for (size_t k = 0; k + 1 < n; k++) {
        c.ops.push_back(gate(GateKind::kCnot, {k, k + 1}));
    }
    return c;
}

Circuit oracle_step_circuit(const BooleanFunction &f) {
    size_t n = f.arity();
    Circuit c;
    c.n_qubits = n + 1;
    std::vector<size_t> inputs;
    for (size_t k = 0; k < n; k++) {
        c.ops.push_back(gate(GateKind::kH, {k}));
        inputs.push_back(k);
    }
    c.ops.push_back(OracleApp{f, std::move(inputs), n});
    return c;
}

Circuit build_library_circuit(std::string_view name, const LibraryParams &params) {
    if (name == "deutsch") {
        if (!params.function.has_value()) {
            throw Error(ErrorCode::kBadParams, "deutsch needs a boolean function");
        }
        return deutsch_circuit(*params.function);
    }
    if (name == "gk_entangler") {
        return gk_entangler_circuit();
    }
    if (name == "ghz") {
        if (!params.n.has_value()) {
            throw Error(ErrorCode::kBadParams, "ghz needs n");
        }
        return ghz_circuit(*params.n);
    }
    if (name == "oracle_step") {
        if (!params.function.has_value()) {
            throw Error(ErrorCode::kBadParams, "oracle_step needs a boolean function");
        }
        return oracle_step_circuit(*params.function);
    }
    throw Error(ErrorCode::kUnknownName, "unknown library circuit '" + std::string(name) + "'");
}

}  // namespace qsim
