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

#ifndef QSIM_GATES_H
#define QSIM_GATES_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace qsim {

using Complex = std::complex<double>;

/// Gate alphabet of the circuit IR.
///
/// Naming follows the phase-gate convention used throughout this project:
/// `kR` is diag(1, i) (often called S elsewhere) and `kS` is diag(1, e^{i pi/4})
/// (often called T elsewhere). `kS` is the only non-Clifford gate.
enum class GateKind : uint8_t { kX, kY, kZ, kR, kH, kS, kCnot, kI };

inline constexpr std::array<GateKind, 8> kAllGateKinds = {
    GateKind::kX, GateKind::kY, GateKind::kZ, GateKind::kR,
    GateKind::kH, GateKind::kS, GateKind::kCnot, GateKind::kI,
};

enum class PauliAxis : uint8_t { kX, kY, kZ };

inline constexpr std::array<PauliAxis, 3> kAllPauliAxes = {PauliAxis::kX, PauliAxis::kY, PauliAxis::kZ};

size_t gate_arity(GateKind kind);
bool is_clifford(GateKind kind);
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);

char axis_name(PauliAxis axis);
std::optional<PauliAxis> axis_from_name(std::string_view name);

/// Dense matrix of a gate, row-major, dimension 2 or 4.
///
/// For CNOT the first target is the control and is the more significant
/// tensor factor, i.e. rows/columns are indexed |control target>.
struct GateMatrix {
    size_t dim = 0;
    std::array<Complex, 16> entries{};

    Complex operator()(size_t row, size_t col) const {
        return entries[row * dim + col];
    }
};

GateMatrix gate_matrix(GateKind kind);
GateMatrix adjoint(const GateMatrix &m);
GateMatrix multiply(const GateMatrix &a, const GateMatrix &b);

}  // namespace qsim

#endif
