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

#ifndef QSIM_CIRCUIT_H
#define QSIM_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qsim/error.h"
#include "qsim/gates.h"

namespace qsim {

/// Truth table of f : {0,1}^n -> {0,1}. Entry x is f(x) with x read
/// big-endian over the oracle's input qubits (first input = most significant).
class BooleanFunction {
   public:
    BooleanFunction(size_t arity, std::vector<uint8_t> table);

    /// Parses a bit string such as "0110"; its length must be a power of two >= 2.
    static BooleanFunction from_bits(std::string_view bits);

    size_t arity() const {
        return arity_;
    }
    const std::vector<uint8_t> &table() const {
        return table_;
    }
    bool operator()(uint64_t x) const {
        return table_[x] != 0;
    }
    std::string to_bits() const;

    bool operator==(const BooleanFunction &) const = default;

   private:
    size_t arity_;
    std::vector<uint8_t> table_;
};

struct GateApp {
    GateKind kind;
    std::vector<size_t> targets;
    /// Gate fires only when this classical bit is 1.
    std::optional<size_t> condition;

    bool operator==(const GateApp &) const = default;
};

/// |x>|y> -> |x>|y xor f(x)>.
struct OracleApp {
    BooleanFunction function;
    std::vector<size_t> inputs;
    size_t output;

    bool operator==(const OracleApp &) const = default;
};

struct Measure {
    size_t qubit;
    PauliAxis axis;
    size_t cbit;

    bool operator==(const Measure &) const = default;
};

using CircuitOp = std::variant<GateApp, OracleApp, Measure>;

struct Circuit {
    size_t n_qubits = 0;
    size_t n_cbits = 0;
    std::vector<CircuitOp> ops;

    bool operator==(const Circuit &) const = default;

    bool has_measurements() const;
};

struct Diagnostic {
    size_t op_index;
    ErrorCode code;
    std::string message;
};

/// Checks every structural invariant of `circuit`; an empty result means valid.
std::vector<Diagnostic> validate(const Circuit &circuit);

/// Throws an Error describing the first diagnostic, if any.
void require_valid(const Circuit &circuit);

struct GkClassification {
    bool is_gk;
    std::optional<size_t> first_offender;
};

/// A circuit is in the Gottesman-Knill set when it contains only Clifford
/// gates (conditioned or not) and Pauli-axis measurements.
GkClassification classify_gottesman_knill(const Circuit &circuit);

}  // namespace qsim

#endif
