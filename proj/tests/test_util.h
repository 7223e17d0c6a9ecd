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

#ifndef QSIM_TESTS_TEST_UTIL_H
#define QSIM_TESTS_TEST_UTIL_H

#include <cmath>
#include <complex>
#include <vector>

#include "qsim/circuit.h"
#include "qsim/rng.h"
#include "qsim/state_vector.h"

namespace qsim::gen {

inline PureState random_state(size_t n, Rng &rng) {
    std::vector<Complex> amps(size_t{1} << n);
    double norm = 0;
    for (auto &a : amps) {
        a = Complex(rng.uniform() * 2 - 1, rng.uniform() * 2 - 1);
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return PureState::from_amplitudes(amps);
}

inline GateApp random_gate(size_t n, Rng &rng, bool clifford_only) {
    static constexpr GateKind kSingle[] = {GateKind::kX, GateKind::kY, GateKind::kZ, GateKind::kR,
                                           GateKind::kH, GateKind::kI, GateKind::kS};
    size_t choices = clifford_only ? 6 : 7;
    if (n >= 2 && rng.below(4) == 0) {
        size_t a = rng.below(n);
        size_t b = rng.below(n - 1);
        if (b >= a) {
            b++;
        }
        return GateApp{GateKind::kCnot, {a, b}, std::nullopt};
    }
    return GateApp{kSingle[rng.below(choices)], {static_cast<size_t>(rng.below(n))}, std::nullopt};
}

inline BooleanFunction random_function(size_t arity, Rng &rng) {
    std::vector<uint8_t> table(size_t{1} << arity);
    for (auto &v : table) {
        v = static_cast<uint8_t>(rng.below(2));
    }
    return BooleanFunction(arity, table);
}

/// Clifford gates, Pauli measurements in random axes and gates conditioned
/// on bits that have already been written.
inline Circuit random_gk_circuit(size_t n, size_t depth, Rng &rng) {
    Circuit c;
    c.n_qubits = n;
    c.n_cbits = n;
    std::vector<size_t> written;
    for (size_t k = 0; k < depth; k++) {
        auto pick = rng.below(5);
        if (pick == 0) {
            size_t q = rng.below(n);
            size_t cbit = rng.below(n);
            c.ops.push_back(Measure{q, kAllPauliAxes[rng.below(3)], cbit});
            written.push_back(cbit);
        } else {
            GateApp g = random_gate(n, rng, true);
            if (!written.empty() && pick == 1) {
                g.condition = written[rng.below(written.size())];
            }
            c.ops.push_back(g);
        }
    }
    return c;
}

/// Any op kind, including oracles and the S gate.
inline Circuit random_circuit(size_t n, size_t depth, Rng &rng) {
    Circuit c = random_gk_circuit(n, depth, rng);
    for (auto &op : c.ops) {
        if (!std::holds_alternative<GateApp>(op)) {
            continue;
        }
        if (rng.below(6) == 0 && n >= 2) {
            size_t arity = 1 + rng.below(std::min<size_t>(n - 1, 3));
            std::vector<size_t> qubits(n);
            for (size_t q = 0; q < n; q++) {
                qubits[q] = q;
            }
            for (size_t q = n; q > 1; q--) {
                std::swap(qubits[q - 1], qubits[rng.below(q)]);
            }
            op = OracleApp{random_function(arity, rng), std::vector<size_t>(qubits.begin(), qubits.begin() + arity),
                           qubits[arity]};
        } else if (rng.below(6) == 0) {
            op = GateApp{GateKind::kS, {static_cast<size_t>(rng.below(n))}, std::nullopt};
        }
    }
    return c;
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0;
    for (size_t k = 0; k < a.size(); k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

}  // namespace qsim::gen

#endif
