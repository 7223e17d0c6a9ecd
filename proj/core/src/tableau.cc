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

#include "qsim/tableau.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace qsim {

Tableau::Tableau(size_t n_qubits)
    : n_(n_qubits),
      words_((n_qubits + 63) / 64),
      xs_((2 * n_qubits + 1) * ((n_qubits + 63) / 64), 0),
      zs_((2 * n_qubits + 1) * ((n_qubits + 63) / 64), 0),
      signs_(2 * n_qubits + 1, 0) {
    if (n_qubits < 1) {
        throw Error(ErrorCode::kBadParams, "a tableau needs at least one qubit");
    }
    for (size_t q = 0; q < n_; q++) {
        xrow(q)[q >> 6] |= uint64_t{1} << (q & 63);
        zrow(n_ + q)[q >> 6] |= uint64_t{1} << (q & 63);
    }
}

PauliString Tableau::row(size_t i) const {
    PauliString p(n_);
    std::copy(xrow(i), xrow(i) + words_, p.xs().begin());
    std::copy(zrow(i), zrow(i) + words_, p.zs().begin());
    p.set_phase(signs_[i] ? 2 : 0);
    return p;
}

void Tableau::check_qubit(size_t q) const {
    if (q >= n_) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "qubit " + std::to_string(q) + " on a " + std::to_string(n_) + "-qubit tableau");
    }
}

void Tableau::h(size_t q) {
    check_qubit(q);
    const size_t w = q >> 6;
    const uint64_t bit = uint64_t{1} << (q & 63);
    for (size_t i = 0; i < 2 * n_; i++) {
        uint64_t &xw = xrow(i)[w];
        uint64_t &zw = zrow(i)[w];
        const bool xv = xw & bit;
        const bool zv = zw & bit;
        signs_[i] ^= xv & zv;
        if (xv != zv) {
            xw ^= bit;
            zw ^= bit;
        }
    }
}

void Tableau::r(size_t q) {
    check_qubit(q);
    const size_t w = q >> 6;
    const uint64_t bit = uint64_t{1} << (q & 63);
    for (size_t i = 0; i < 2 * n_; i++) {
        uint64_t &zw = zrow(i)[w];
        const bool xv = xrow(i)[w] & bit;
        signs_[i] ^= xv & bool(zw & bit);
        if (xv) {
            zw ^= bit;
        }
    }
}

void Tableau::r_dag(size_t q) {
    check_qubit(q);
    const size_t w = q >> 6;
    const uint64_t bit = uint64_t{1} << (q & 63);
    for (size_t i = 0; i < 2 * n_; i++) {
        uint64_t &zw = zrow(i)[w];
        const bool xv = xrow(i)[w] & bit;
        signs_[i] ^= xv & !(zw & bit);
        if (xv) {
            zw ^= bit;
        }
    }
}

void Tableau::x(size_t q) {
    check_qubit(q);
    for (size_t i = 0; i < 2 * n_; i++) {
        signs_[i] ^= zbit(i, q);
    }
}

void Tableau::y(size_t q) {
    check_qubit(q);
    for (size_t i = 0; i < 2 * n_; i++) {
        signs_[i] ^= xbit(i, q) ^ zbit(i, q);
    }
}

void Tableau::z(size_t q) {
    check_qubit(q);
    for (size_t i = 0; i < 2 * n_; i++) {
        signs_[i] ^= xbit(i, q);
    }
}

void Tableau::cnot(size_t control, size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw Error(ErrorCode::kDuplicateQubit, "cnot control and target coincide");
    }
    const size_t cw = control >> 6, tw = target >> 6;
    const uint64_t cb = uint64_t{1} << (control & 63);
    const uint64_t tb = uint64_t{1} << (target & 63);
    for (size_t i = 0; i < 2 * n_; i++) {
        uint64_t *xr = xrow(i);
        uint64_t *zr = zrow(i);
        const bool xc = xr[cw] & cb, zc = zr[cw] & cb;
        const bool xt = xr[tw] & tb, zt = zr[tw] & tb;
        signs_[i] ^= xc & zt & (xt ^ zc ^ true);
        if (xc) {
            xr[tw] ^= tb;
        }
        if (zt) {
            zr[cw] ^= cb;
        }
    }
}

void Tableau::apply_gate(GateKind kind, std::span<const size_t> targets) {
    if (targets.size() != gate_arity(kind)) {
        throw Error(ErrorCode::kArityMismatch, std::string(gate_name(kind)) + " arity mismatch");
    }
    switch (kind) {
        case GateKind::kX:
            x(targets[0]);
            return;
        case GateKind::kY:
            y(targets[0]);
            return;
        case GateKind::kZ:
            z(targets[0]);
            return;
        case GateKind::kR:
            r(targets[0]);
            return;
        case GateKind::kH:
            h(targets[0]);
            return;
        case GateKind::kCnot:
            cnot(targets[0], targets[1]);
            return;
        case GateKind::kI:
            check_qubit(targets[0]);
            return;
        case GateKind::kS:
            throw Error(ErrorCode::kNonClifford, "the s gate is outside the Clifford group");
    }
}

void Tableau::rowsum(size_t h, size_t i) {
    uint8_t g = product_phase_exponent({xrow(i), words_}, {zrow(i), words_}, {xrow(h), words_}, {zrow(h), words_});
    uint8_t total = static_cast<uint8_t>((2 * signs_[h] + 2 * signs_[i] + g) & 3);
    // Odd totals only arise for destabilizer rows, whose signs carry no meaning.
    signs_[h] = (total & 2) >> 1;
    uint64_t *xh = xrow(h);
    uint64_t *zh = zrow(h);
    const uint64_t *xi = xrow(i);
    const uint64_t *zi = zrow(i);
    for (size_t w = 0; w < words_; w++) {
        xh[w] ^= xi[w];
        zh[w] ^= zi[w];
    }
}

// Basis changes mapping the measured Pauli onto Z by conjugation:
//   X: H X H = Z.
//   Y: V = H R^dag, since R^dag Y R = X and then H X H = Z. Undone by R H.
void Tableau::to_z_basis(size_t q, PauliAxis axis) {
    switch (axis) {
        case PauliAxis::kZ:
            return;
        case PauliAxis::kX:
            h(q);
            return;
        case PauliAxis::kY:
            r_dag(q);
            h(q);
            return;
    }
}

void Tableau::from_z_basis(size_t q, PauliAxis axis) {
    switch (axis) {
        case PauliAxis::kZ:
            return;
        case PauliAxis::kX:
            h(q);
            return;
        case PauliAxis::kY:
            h(q);
            r(q);
            return;
    }
}

size_t Tableau::anticommuting_stabilizer(size_t q) const {
    for (size_t p = n_; p < 2 * n_; p++) {
        if (xbit(p, q)) {
            return p;
        }
    }
    return 2 * n_;
}

int Tableau::deterministic_z_outcome(size_t q) {
    const size_t scratch = 2 * n_;
    std::fill(xrow(scratch), xrow(scratch) + words_, 0);
    std::fill(zrow(scratch), zrow(scratch) + words_, 0);
    signs_[scratch] = 0;
    for (size_t i = 0; i < n_; i++) {
        if (xbit(i, q)) {
            rowsum(scratch, i + n_);
        }
    }
    const int outcome = signs_[scratch] ? -1 : 1;
    std::fill(xrow(scratch), xrow(scratch) + words_, 0);
    std::fill(zrow(scratch), zrow(scratch) + words_, 0);
    signs_[scratch] = 0;
    return outcome;
}

void Tableau::collapse_z(size_t q, int outcome) {
    const size_t p = anticommuting_stabilizer(q);
    if (p == 2 * n_) {
        if (deterministic_z_outcome(q) != outcome) {
            throw Error(ErrorCode::kDegenerateNorm, "measurement outcome has probability 0");
        }
        return;
    }
    for (size_t i = 0; i < 2 * n_; i++) {
        if (i != p && xbit(i, q)) {
            rowsum(i, p);
        }
    }
    std::copy(xrow(p), xrow(p) + words_, xrow(p - n_));
    std::copy(zrow(p), zrow(p) + words_, zrow(p - n_));
    signs_[p - n_] = signs_[p];
    std::fill(xrow(p), xrow(p) + words_, 0);
    std::fill(zrow(p), zrow(p) + words_, 0);
    zrow(p)[q >> 6] |= uint64_t{1} << (q & 63);
    signs_[p] = outcome == -1;
}

double Tableau::p_plus(size_t q, PauliAxis axis) {
    check_qubit(q);
    to_z_basis(q, axis);
    double p;
    if (anticommuting_stabilizer(q) < 2 * n_) {
        p = 0.5;
    } else {
        p = deterministic_z_outcome(q) == 1 ? 1.0 : 0.0;
    }
    from_z_basis(q, axis);
    return p;
}

void Tableau::collapse(size_t q, PauliAxis axis, int outcome) {
    check_qubit(q);
    if (outcome != 1 && outcome != -1) {
        throw Error(ErrorCode::kBadParams, "measurement outcome must be +1 or -1");
    }
    to_z_basis(q, axis);
    try {
        collapse_z(q, outcome);
    } catch (...) {
        from_z_basis(q, axis);
        throw;
    }
    from_z_basis(q, axis);
}

bool Tableau::is_consistent() const {
    std::vector<PauliString> rows;
    rows.reserve(2 * n_);
    for (size_t i = 0; i < 2 * n_; i++) {
        rows.push_back(row(i));
    }
    for (size_t i = 0; i < 2 * n_; i++) {
        for (size_t j = i + 1; j < 2 * n_; j++) {
            bool should_anticommute = j == i + n_;
            if (rows[i].commutes(rows[j]) == should_anticommute) {
                return false;
            }
        }
    }
    return true;
}

Tableau init_tableau(size_t n) {
    return Tableau(n);
}

void apply_clifford(Tableau &t, const GateApp &op, std::span<const uint8_t> cbits) {
    if (!is_clifford(op.kind)) {
        throw Error(ErrorCode::kNonClifford, "the s gate is outside the Clifford group");
    }
    if (op.condition.has_value()) {
        if (*op.condition >= cbits.size()) {
            throw Error(ErrorCode::kIndexOutOfRange, "condition bit c" + std::to_string(*op.condition) +
                                                         " is not present");
        }
        if (!cbits[*op.condition]) {
            return;
        }
    }
    t.apply_gate(op.kind, op.targets);
}

PauliMeasureResult measure_pauli(Tableau t, size_t qubit, PauliAxis axis, Rng &rng) {
    double p = t.p_plus(qubit, axis);
    int outcome = sample_outcome(p, rng.uniform());
    t.collapse(qubit, axis, outcome);
    return PauliMeasureResult{outcome, std::move(t), p};
}

PureState to_statevector(const Tableau &t) {
    const size_t n = t.num_qubits();
    if (n > 20) {
        throw Error(ErrorCode::kTooManyQubits, "to_statevector supports at most 20 qubits");
    }
    std::vector<PauliString> gens;
    for (size_t i = 0; i < n; i++) {
        gens.push_back(t.stabilizer(i));
    }

    // Row-reduce the X parts; rows past `rank` become pure Z strings that pin
    // down a basis state in the support of the stabilizer state.
    size_t rank = 0;
    for (size_t q = 0; q < n && rank < n; q++) {
        size_t pivot = rank;
        while (pivot < n && !gens[pivot].x(q)) {
            pivot++;
        }
        if (pivot == n) {
            continue;
        }
        std::swap(gens[rank], gens[pivot]);
        for (size_t k = 0; k < n; k++) {
            if (k != rank && gens[k].x(q)) {
                gens[k] *= gens[rank];
            }
        }
        rank++;
    }

    // Solve z . x = sign over GF(2) for the Z-type rows.
    struct Equation {
        std::vector<uint8_t> coeffs;
        uint8_t rhs;
    };
    std::vector<Equation> eqs;
    for (size_t k = rank; k < n; k++) {
        Equation e{std::vector<uint8_t>(n, 0), static_cast<uint8_t>(gens[k].negative())};
        for (size_t q = 0; q < n; q++) {
            e.coeffs[q] = gens[k].z(q);
        }
        eqs.push_back(std::move(e));
    }
    std::vector<size_t> pivot_cols;
    size_t row = 0;
    for (size_t q = 0; q < n && row < eqs.size(); q++) {
        size_t pivot = row;
        while (pivot < eqs.size() && !eqs[pivot].coeffs[q]) {
            pivot++;
        }
        if (pivot == eqs.size()) {
            continue;
        }
        std::swap(eqs[row], eqs[pivot]);
        for (size_t k = 0; k < eqs.size(); k++) {
            if (k != row && eqs[k].coeffs[q]) {
                for (size_t c = 0; c < n; c++) {
                    eqs[k].coeffs[c] ^= eqs[row].coeffs[c];
                }
                eqs[k].rhs ^= eqs[row].rhs;
            }
        }
        pivot_cols.push_back(q);
        row++;
    }
    uint64_t support_index = 0;
    for (size_t k = 0; k < pivot_cols.size(); k++) {
        if (eqs[k].rhs) {
            support_index |= uint64_t{1} << (n - 1 - pivot_cols[k]);
        }
    }

    std::vector<Complex> amps(uint64_t{1} << n, 0.0);
    amps[support_index] = 1;
    std::vector<Complex> image(amps.size());
    for (size_t i = 0; i < n; i++) {
        // v <- (v + S v) / 2
        image = amps;
        t.stabilizer(i).apply_to(image);
        for (size_t k = 0; k < amps.size(); k++) {
            amps[k] = 0.5 * (amps[k] + image[k]);
        }
    }
    double norm = 0;
    for (const auto &a : amps) {
        norm += std::norm(a);
    }
    if (norm < 1e-12) {
        throw Error(ErrorCode::kDegenerateNorm, "tableau does not describe a stabilizer state");
    }
    const double scale = 1 / std::sqrt(norm);
    for (auto &a : amps) {
        a *= scale;
    }
    return PureState::from_amplitudes(std::move(amps));
}

}  // namespace qsim
