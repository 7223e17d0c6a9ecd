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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <span>
#include <sstream>

namespace qsim {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) {
            k++;
        }
        size_t start = k;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) {
            k++;
        }
        if (k > start) {
            tokens.push_back(line.substr(start, k - start));
        }
    }
    return tokens;
}

class LineParser {
   public:
    LineParser(Circuit &circuit, size_t line_number) : circuit_(circuit), line_(line_number) {
    }

    [[noreturn]] void fail(ErrorCode code, const std::string &message) const {
        throw Error(code, message, line_);
    }

    size_t parse_count(std::string_view token) const {
        size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
            fail(ErrorCode::kSyntax, "expected a decimal index, got '" + std::string(token) + "'");
        }
        return value;
    }

    size_t parse_prefixed(std::string_view token, char prefix) const {
        if (token.size() < 2 || std::tolower(static_cast<unsigned char>(token[0])) != prefix) {
            fail(ErrorCode::kSyntax, std::string("expected ") + prefix + "<index>, got '" + std::string(token) + "'");
        }
        return parse_count(token.substr(1));
    }

    size_t qubit(std::string_view token) const {
        size_t q = parse_prefixed(token, 'q');
        if (q >= circuit_.n_qubits) {
            fail(ErrorCode::kIndexOutOfRange,
                 "qubit q" + std::to_string(q) + " but circuit declares " + std::to_string(circuit_.n_qubits));
        }
        return q;
    }

    size_t cbit(std::string_view token) const {
        size_t c = parse_prefixed(token, 'c');
        if (c >= circuit_.n_cbits) {
            fail(ErrorCode::kIndexOutOfRange,
                 "classical bit c" + std::to_string(c) + " but circuit declares " + std::to_string(circuit_.n_cbits));
        }
        return c;
    }

    void expect_arrow(std::string_view token) const {
        if (token != "->") {
            fail(ErrorCode::kSyntax, "expected '->', got '" + std::string(token) + "'");
        }
    }

    CircuitOp parse_op(std::span<const std::string_view> tokens, const std::vector<bool> &written) const {
        std::string head = lower(tokens[0]);
        if (head == "cif") {
            if (tokens.size() < 3) {
                fail(ErrorCode::kSyntax, "cif needs a classical bit and a gate");
            }
            size_t c = cbit(tokens[1]);
            if (!written[c]) {
                fail(ErrorCode::kUndefinedConditionBit,
                     "condition bit c" + std::to_string(c) + " is not written by an earlier measure");
            }
            std::string inner = lower(tokens[2]);
            auto kind = gate_from_name(inner);
            if (!kind.has_value()) {
                if (inner == "oracle" || inner == "measure" || inner == "cif") {
                    fail(ErrorCode::kUnknownGate, "only gates may be conditioned, got '" + inner + "'");
                }
                fail(ErrorCode::kUnknownGate, "unknown gate '" + std::string(tokens[2]) + "'");
            }
            GateApp g = parse_gate(*kind, tokens.subspan(3));
            g.condition = c;
            return g;
        }
        if (head == "oracle") {
            return parse_oracle(tokens.subspan(1));
        }
        if (head == "measure") {
            return parse_measure(tokens.subspan(1));
        }
        if (head == "qubits" || head == "cbits") {
            fail(ErrorCode::kMalformedHeader, "'" + head + "' may only appear at the top of the file");
        }
        auto kind = gate_from_name(head);
        if (!kind.has_value()) {
            fail(ErrorCode::kUnknownGate, "unknown gate '" + std::string(tokens[0]) + "'");
        }
        return parse_gate(*kind, tokens.subspan(1));
    }

    GateApp parse_gate(GateKind kind, std::span<const std::string_view> args) const {
        if (args.size() != gate_arity(kind)) {
            fail(ErrorCode::kArityMismatch, std::string(gate_name(kind)) + " expects " +
                                                std::to_string(gate_arity(kind)) + " qubit(s), got " +
                                                std::to_string(args.size()));
        }
        GateApp g{kind, {}, std::nullopt};
        for (auto token : args) {
            g.targets.push_back(qubit(token));
        }
        if (g.targets.size() == 2 && g.targets[0] == g.targets[1]) {
            fail(ErrorCode::kArityMismatch, "cnot needs two distinct qubits");
        }
        return g;
    }

    OracleApp parse_oracle(std::span<const std::string_view> args) const {
        // <tt> q.. -> q<out>
        if (args.size() < 4 || args[args.size() - 2] != "->") {
            fail(ErrorCode::kSyntax, "expected 'oracle <truth-table> q<i>.. -> q<out>'");
        }
        auto function = [&] {
            try {
                return BooleanFunction::from_bits(args[0]);
            } catch (const Error &e) {
                fail(e.code(), e.what());
            }
        }();
        auto inputs_tokens = args.subspan(1, args.size() - 3);
        if (inputs_tokens.size() != function.arity()) {
            fail(ErrorCode::kArityMismatch, "truth table of length " + std::to_string(function.table().size()) +
                                                " needs " + std::to_string(function.arity()) + " inputs, got " +
                                                std::to_string(inputs_tokens.size()));
        }
        std::vector<size_t> inputs;
        for (auto token : inputs_tokens) {
            size_t q = qubit(token);
            if (std::find(inputs.begin(), inputs.end(), q) != inputs.end()) {
                fail(ErrorCode::kArityMismatch, "oracle input q" + std::to_string(q) + " repeated");
            }
            inputs.push_back(q);
        }
        size_t output = qubit(args.back());
        if (std::find(inputs.begin(), inputs.end(), output) != inputs.end()) {
            fail(ErrorCode::kArityMismatch, "oracle output q" + std::to_string(output) + " is also an input");
        }
        return OracleApp{std::move(function), std::move(inputs), output};
    }

    Measure parse_measure(std::span<const std::string_view> args) const {
        if (args.size() != 4) {
            fail(ErrorCode::kSyntax, "expected 'measure q<i> X|Y|Z -> c<k>'");
        }
        size_t q = qubit(args[0]);
        auto axis = axis_from_name(args[1]);
        if (!axis.has_value()) {
            fail(ErrorCode::kSyntax, "measurement axis must be X, Y or Z, got '" + std::string(args[1]) + "'");
        }
        expect_arrow(args[2]);
        return Measure{q, *axis, cbit(args[3])};
    }

   private:
    Circuit &circuit_;
    size_t line_;
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    std::vector<bool> written;
    enum class Stage { kExpectQubits, kMaybeCbits, kBody } stage = Stage::kExpectQubits;

    size_t line_number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_number++;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        LineParser parser(circuit, line_number);
        std::string head = lower(tokens[0]);

        if (stage == Stage::kExpectQubits) {
            if (head != "qubits" || tokens.size() != 2) {
                parser.fail(ErrorCode::kMalformedHeader, "first line must be 'qubits <n>'");
            }
            size_t n = 0;
            try {
                n = parser.parse_count(tokens[1]);
            } catch (const Error &) {
                parser.fail(ErrorCode::kMalformedHeader, "qubit count must be a decimal integer");
            }
            if (n == 0) {
                parser.fail(ErrorCode::kMalformedHeader, "qubit count must be at least 1");
            }
            circuit.n_qubits = n;
            stage = Stage::kMaybeCbits;
            continue;
        }
        if (stage == Stage::kMaybeCbits) {
            stage = Stage::kBody;
            if (head == "cbits") {
                if (tokens.size() != 2) {
                    parser.fail(ErrorCode::kMalformedHeader, "expected 'cbits <m>'");
                }
                try {
                    circuit.n_cbits = parser.parse_count(tokens[1]);
                } catch (const Error &) {
                    parser.fail(ErrorCode::kMalformedHeader, "classical bit count must be a decimal integer");
                }
                written.assign(circuit.n_cbits, false);
                continue;
            }
        }

        CircuitOp op = parser.parse_op(tokens, written);
        if (const auto *m = std::get_if<Measure>(&op)) {
            written[m->cbit] = true;
        }
        circuit.ops.push_back(std::move(op));
    }

    if (stage == Stage::kExpectQubits) {
        throw Error(ErrorCode::kMalformedHeader, "missing 'qubits <n>' header", line_number);
    }
    return circuit;
}

Circuit load_circuit_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::kIoError, "cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_circuit(buffer.str());
}

std::string to_text(const Circuit &circuit) {
    std::string out = "qubits " + std::to_string(circuit.n_qubits) + "\n";
    if (circuit.n_cbits > 0) {
        out += "cbits " + std::to_string(circuit.n_cbits) + "\n";
    }
    auto q = [](size_t k) { return "q" + std::to_string(k); };
    for (const auto &op : circuit.ops) {
        if (const auto *g = std::get_if<GateApp>(&op)) {
            if (g->condition.has_value()) {
                out += "cif c" + std::to_string(*g->condition) + " ";
            }
            out += gate_name(g->kind);
            for (size_t t : g->targets) {
                out += " " + q(t);
            }
        } else if (const auto *o = std::get_if<OracleApp>(&op)) {
            out += "oracle " + o->function.to_bits();
            for (size_t t : o->inputs) {
                out += " " + q(t);
            }
            out += " -> " + q(o->output);
        } else {
            const auto &m = std::get<Measure>(op);
            out += "measure " + q(m.qubit) + " " + axis_name(m.axis) + " -> c" + std::to_string(m.cbit);
        }
        out += "\n";
    }
    return out;
}

}  // namespace qsim
