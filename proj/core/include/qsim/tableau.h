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

#ifndef QSIM_TABLEAU_H
#define QSIM_TABLEAU_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qsim/circuit.h"
#include "qsim/pauli_string.h"
#include "qsim/rng.h"
#include "qsim/state_vector.h"

namespace qsim {

/// Destabilizer/stabilizer tableau over n qubits.
///
/// Rows 0..n-1 are destabilizers, rows n..2n-1 stabilizers, and row 2n is a
/// scratch row used for deterministic measurements. Each row stores packed
/// x and z bits plus a sign bit. Gate updates cost O(n) and measurements
/// O(n^2 / 64) word operations.
class Tableau {
   public:
    /// |0...0>: destabilizer i = +X_i, stabilizer i = +Z_i.
    explicit Tableau(size_t n_qubits);

    size_t num_qubits() const {
        return n_;
    }

    PauliString destabilizer(size_t i) const {
        return row(i);
    }
    PauliString stabilizer(size_t i) const {
        return row(n_ + i);
    }

    /// Conjugates the state by a Clifford gate. Throws NonClifford for S.
    void apply_gate(GateKind kind, std::span<const size_t> targets);

    void h(size_t q);
    /// Phase gate diag(1, i).
    void r(size_t q);
    void r_dag(size_t q);
    void x(size_t q);
    void y(size_t q);
    void z(size_t q);
    void cnot(size_t control, size_t target);

    /// Probability of the +1 outcome of a Pauli-axis measurement; always
    /// exactly 0, 1/2 or 1. The tableau is left unchanged.
    double p_plus(size_t q, PauliAxis axis);

    /// Projects onto the `outcome` (+1 / -1) eigenspace of the Pauli
    /// observable. Throws DegenerateNorm if that outcome has probability 0.
    void collapse(size_t q, PauliAxis axis, int outcome);

    /// Every pair of stabilizer rows commutes and each destabilizer
    /// anticommutes exactly with its own stabilizer.
    bool is_consistent() const;

    size_t memory_bytes() const {
        return (xs_.size() + zs_.size()) * sizeof(uint64_t) + signs_.size();
    }

    bool operator==(const Tableau &) const = default;

   private:
    PauliString row(size_t i) const;
    uint64_t *xrow(size_t i) {
        return xs_.data() + i * words_;
    }
    uint64_t *zrow(size_t i) {
        return zs_.data() + i * words_;
    }
    const uint64_t *xrow(size_t i) const {
        return xs_.data() + i * words_;
    }
    const uint64_t *zrow(size_t i) const {
        return zs_.data() + i * words_;
    }
    bool xbit(size_t i, size_t q) const {
        return (xrow(i)[q >> 6] >> (q & 63)) & 1;
    }
    bool zbit(size_t i, size_t q) const {
        return (zrow(i)[q >> 6] >> (q & 63)) & 1;
    }
    void check_qubit(size_t q) const;

    /// Row h <- row i * row h.
    void rowsum(size_t h, size_t i);

    void to_z_basis(size_t q, PauliAxis axis);
    void from_z_basis(size_t q, PauliAxis axis);
    /// Index of the first stabilizer row with an X component on q, or 2n.
    size_t anticommuting_stabilizer(size_t q) const;
    /// Sign (+1 / -1) of a Z_q measurement known to be deterministic.
    int deterministic_z_outcome(size_t q);
    void collapse_z(size_t q, int outcome);

    size_t n_;
    size_t words_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> signs_;
};

Tableau init_tableau(size_t n);

/// Applies a Clifford GateApp (identity when its condition bit is 0).
/// Throws NonClifford for the S gate.
void apply_clifford(Tableau &t, const GateApp &op, std::span<const uint8_t> cbits);

struct PauliMeasureResult {
    int outcome;
    Tableau updated;
    double p_plus;
};

PauliMeasureResult measure_pauli(Tableau t, size_t qubit, PauliAxis axis, Rng &rng);

/// The state stabilized by every stabilizer row, fixed up to global phase.
/// Throws TooManyQubits above 20 qubits.
PureState to_statevector(const Tableau &t);

}  // namespace qsim

#endif
