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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "qsim/error.h"

namespace qsim {

size_t gate_arity(GateKind kind) {
    return kind == GateKind::kCnot ? 2 : 1;
}

bool is_clifford(GateKind kind) {
    return kind != GateKind::kS;
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::kX:
            return "x";
        case GateKind::kY:
            return "y";
        case GateKind::kZ:
            return "z";
        case GateKind::kR:
            return "r";
        case GateKind::kH:
            return "h";
        case GateKind::kS:
            return "s";
        case GateKind::kCnot:
            return "cnot";
        case GateKind::kI:
            return "i";
    }
    return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (GateKind kind : kAllGateKinds) {
        if (gate_name(kind) == lower) {
            return kind;
        }
    }
    return std::nullopt;
}

char axis_name(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::kX:
            return 'X';
        case PauliAxis::kY:
            return 'Y';
        case PauliAxis::kZ:
            return 'Z';
    }
    return '?';
}

std::optional<PauliAxis> axis_from_name(std::string_view name) {
    if (name.size() != 1) {
        return std::nullopt;
    }
    switch (name[0]) {
        case 'x':
        case 'X':
            return PauliAxis::kX;
        case 'y':
        case 'Y':
            return PauliAxis::kY;
        case 'z':
        case 'Z':
            return PauliAxis::kZ;
        default:
            return std::nullopt;
    }
}

GateMatrix gate_matrix(GateKind kind) {
    const Complex i{0, 1};
    const double h = 1 / std::sqrt(2.0);
    GateMatrix m;
    m.dim = 2;
    switch (kind) {
        case GateKind::kX:
            m.entries = {0, 1, 1, 0};
            break;
        case GateKind::kY:
            m.entries = {0, -i, i, 0};
            break;
        case GateKind::kZ:
            m.entries = {1, 0, 0, -1};
            break;
        case GateKind::kR:
            m.entries = {1, 0, 0, i};
            break;
        case GateKind::kH:
            m.entries = {h, h, h, -h};
            break;
        case GateKind::kS:
            m.entries = {1, 0, 0, Complex{h, h}};
            break;
        case GateKind::kI:
            m.entries = {1, 0, 0, 1};
            break;
        case GateKind::kCnot:
            m.dim = 4;
            m.entries = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
            break;
    }
    return m;
}

GateMatrix adjoint(const GateMatrix &m) {
    GateMatrix out;
    out.dim = m.dim;
    for (size_t r = 0; r < m.dim; r++) {
        for (size_t c = 0; c < m.dim; c++) {
            out.entries[r * m.dim + c] = std::conj(m(c, r));
        }
    }
    return out;
}

GateMatrix multiply(const GateMatrix &a, const GateMatrix &b) {
    if (a.dim != b.dim) {
        throw Error(ErrorCode::kArityMismatch, "matrix dimensions differ");
    }
    GateMatrix out;
    out.dim = a.dim;
    for (size_t r = 0; r < a.dim; r++) {
        for (size_t c = 0; c < a.dim; c++) {
            Complex acc = 0;
            for (size_t k = 0; k < a.dim; k++) {
                acc += a(r, k) * b(k, c);
            }
            out.entries[r * a.dim + c] = acc;
        }
    }
    return out;
}

}  // namespace qsim
