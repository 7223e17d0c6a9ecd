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

#include <set>

namespace qsim {

BooleanFunction::BooleanFunction(size_t arity, std::vector<uint8_t> table) : arity_(arity), table_(std::move(table)) {
    if (arity_ < 1 || arity_ > 24) {
        throw Error(ErrorCode::kBadParams, "boolean function arity must be in [1, 24]");
    }
    if (table_.size() != (size_t{1} << arity_)) {
        throw Error(ErrorCode::kArityMismatch, "truth table of arity " + std::to_string(arity_) + " needs " +
                                                   std::to_string(size_t{1} << arity_) + " entries, got " +
                                                   std::to_string(table_.size()));
    }
    for (uint8_t v : table_) {
        if (v > 1) {
            throw Error(ErrorCode::kBadParams, "truth table entries must be 0 or 1");
        }
    }
}

BooleanFunction BooleanFunction::from_bits(std::string_view bits) {
    size_t arity = 0;
    while ((size_t{1} << arity) < bits.size()) {
        arity++;
    }
    if (bits.size() < 2 || (size_t{1} << arity) != bits.size()) {
        throw Error(ErrorCode::kArityMismatch, "truth table length " + std::to_string(bits.size()) +
                                                   " is not a power of two >= 2");
    }
    std::vector<uint8_t> table;
    table.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::kSyntax, "truth table must contain only '0' and '1'");
        }
        table.push_back(c == '1');
    }
    return BooleanFunction(arity, std::move(table));
}

std::string BooleanFunction::to_bits() const {
    std::string out;
    out.reserve(table_.size());
    for (uint8_t v : table_) {
        out.push_back(v ? '1' : '0');
    }
    return out;
}

bool Circuit::has_measurements() const {
    for (const auto &op : ops) {
        if (std::holds_alternative<Measure>(op)) {
            return true;
        }
    }
    return false;
}

namespace {

struct Validator {
    const Circuit &circuit;
    std::vector<Diagnostic> out;
    std::set<size_t> written_cbits;

    void report(size_t index, ErrorCode code, std::string message) {
        out.push_back({index, code, std::move(message)});
    }

    bool check_qubit(size_t index, size_t q) {
        if (q >= circuit.n_qubits) {
            report(index, ErrorCode::kIndexOutOfRange,
                   "qubit q" + std::to_string(q) + " but circuit declares " + std::to_string(circuit.n_qubits));
            return false;
        }
        return true;
    }

    void operator()(size_t index, const GateApp &g) {
        if (g.targets.size() != gate_arity(g.kind)) {
            report(index, ErrorCode::kArityMismatch,
                   std::string(gate_name(g.kind)) + " expects " + std::to_string(gate_arity(g.kind)) + " target(s)");
        }
        for (size_t q : g.targets) {
            check_qubit(index, q);
        }
        if (g.targets.size() == 2 && g.targets[0] == g.targets[1]) {
            report(index, ErrorCode::kDuplicateQubit, "cnot control and target coincide");
        }
        if (g.condition.has_value()) {
            if (*g.condition >= circuit.n_cbits) {
                report(index, ErrorCode::kIndexOutOfRange,
                       "classical bit c" + std::to_string(*g.condition) + " but circuit declares " +
                           std::to_string(circuit.n_cbits));
            } else if (!written_cbits.contains(*g.condition)) {
                report(index, ErrorCode::kUndefinedConditionBit,
                       "condition bit c" + std::to_string(*g.condition) + " is not written by an earlier measure");
            }
        }
    }

    void operator()(size_t index, const OracleApp &o) {
        if (o.inputs.size() != o.function.arity()) {
            report(index, ErrorCode::kArityMismatch,
                   "oracle of arity " + std::to_string(o.function.arity()) + " given " +
                       std::to_string(o.inputs.size()) + " inputs");
        }
        std::set<size_t> seen;
        for (size_t q : o.inputs) {
            check_qubit(index, q);
            if (!seen.insert(q).second) {
                report(index, ErrorCode::kDuplicateQubit, "oracle input q" + std::to_string(q) + " repeated");
            }
        }
        check_qubit(index, o.output);
        if (seen.contains(o.output)) {
            report(index, ErrorCode::kDuplicateQubit, "oracle output q" + std::to_string(o.output) + " is also an input");
        }
    }

    void operator()(size_t index, const Measure &m) {
        check_qubit(index, m.qubit);
        if (m.cbit >= circuit.n_cbits) {
            report(index, ErrorCode::kIndexOutOfRange,
                   "classical bit c" + std::to_string(m.cbit) + " but circuit declares " +
                       std::to_string(circuit.n_cbits));
        } else {
            written_cbits.insert(m.cbit);
        }
    }
};

}  // namespace

std::vector<Diagnostic> validate(const Circuit &circuit) {
    Validator v{circuit, {}, {}};
    for (size_t k = 0; k < circuit.ops.size(); k++) {
        std::visit([&](const auto &op) { v(k, op); }, circuit.ops[k]);
    }
    return std::move(v.out);
}

void require_valid(const Circuit &circuit) {
    auto diagnostics = validate(circuit);
    if (!diagnostics.empty()) {
        const auto &d = diagnostics.front();
        throw Error(d.code, d.message, std::nullopt, d.op_index);
    }
}

GkClassification classify_gottesman_knill(const Circuit &circuit) {
    for (size_t k = 0; k < circuit.ops.size(); k++) {
        const auto &op = circuit.ops[k];
        if (std::holds_alternative<OracleApp>(op)) {
            return {false, k};
        }
        if (const auto *g = std::get_if<GateApp>(&op); g != nullptr && !is_clifford(g->kind)) {
            return {false, k};
        }
    }
    return {true, std::nullopt};
}

}  // namespace qsim
