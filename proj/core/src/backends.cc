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

#include "qsim/backends.h"

#include <array>
#include <memory>
#include <optional>

namespace qsim {

std::string_view backend_name(BackendId id) {
    return id == BackendId::kStateVector ? "sv" : "stab";
}

namespace {

struct DenseSim {
    PureState state;

    explicit DenseSim(size_t n) : state(n) {
    }
    void apply(const GateApp &g) {
        state.apply_gate(g.kind, g.targets);
    }
    void apply(const OracleApp &o) {
        state.apply_oracle(o.function, o.inputs, o.output);
    }
    double p_plus(const Measure &m) {
        // Snap near-certain outcomes the same way sample_outcome does.
        double p = state.p_plus({m.qubit, m.axis});
        if (p < 1e-12) {
            return 0;
        }
        return p > 1 - 1e-12 ? 1 : p;
    }
    void collapse(const Measure &m, int outcome) {
        state.collapse({m.qubit, m.axis}, outcome);
    }
    size_t memory_bytes() const {
        return state.memory_bytes();
    }
};

struct StabilizerSim {
    Tableau tableau;

    explicit StabilizerSim(size_t n) : tableau(n) {
    }
    void apply(const GateApp &g) {
        tableau.apply_gate(g.kind, g.targets);
    }
    void apply(const OracleApp &) {
        throw Error(ErrorCode::kNonClifford, "oracles are outside the Gottesman-Knill set");
    }
    double p_plus(const Measure &m) {
        return tableau.p_plus(m.qubit, m.axis);
    }
    void collapse(const Measure &m, int outcome) {
        tableau.collapse(m.qubit, m.axis, outcome);
    }
    size_t memory_bytes() const {
        return tableau.memory_bytes();
    }
};

/// Runs ops starting at `pos` up to (not including) the next measurement.
/// Returns the index of that measurement, or ops.size().
template <class Sim>
size_t advance(const Circuit &circuit, Sim &sim, const std::vector<uint8_t> &cbits, size_t pos) {
    for (; pos < circuit.ops.size(); pos++) {
        const auto &op = circuit.ops[pos];
        try {
            if (const auto *g = std::get_if<GateApp>(&op)) {
                if (!g->condition.has_value() || cbits[*g->condition]) {
                    sim.apply(*g);
                }
            } else if (const auto *o = std::get_if<OracleApp>(&op)) {
                sim.apply(*o);
            } else {
                return pos;
            }
        } catch (const Error &e) {
            if (e.op_index().has_value()) {
                throw;
            }
            throw Error(e.code(), e.what(), std::nullopt, pos);
        }
    }
    return pos;
}

std::string register_key(const std::vector<uint8_t> &cbits) {
    std::string key;
    key.reserve(cbits.size());
    for (uint8_t b : cbits) {
        key.push_back(b ? '1' : '0');
    }
    return key;
}

/// Shots walk a lazily built tree keyed by measurement outcomes. A node holds
/// the simulator state just before its measurement (or at the end of the
/// circuit), so shots sharing an outcome prefix share the simulation work.
/// Every shot draws exactly one uniform per measurement from its own stream,
/// which makes the counts independent of what is cached.
template <class Sim>
class ShotTree {
   public:
    ShotTree(const Circuit &circuit, Sim initial, size_t cache_bytes) : circuit_(circuit), budget_(cache_bytes) {
        root_ = std::make_unique<Node>(Node{std::move(initial), std::vector<uint8_t>(circuit.n_cbits, 0), 0, 0, {}});
        settle(*root_, 0);
    }

    std::string shot(Rng &rng) {
        Node *node = root_.get();
        while (node->next_op < circuit_.ops.size()) {
            const auto &m = std::get<Measure>(circuit_.ops[node->next_op]);
            int outcome = sample_outcome(node->p_plus, rng.uniform());
            auto &child = node->children[outcome == 1 ? 0 : 1];
            if (!child) {
                Node next{node->sim, node->cbits, 0, 0, {}};
                descend(next, m, node->next_op, outcome);
                size_t cost = next.sim.memory_bytes() + next.cbits.size() + sizeof(Node);
                if (used_ + cost > budget_) {
                    return finish_uncached(std::move(next), rng);
                }
                used_ += cost;
                child = std::make_unique<Node>(std::move(next));
            }
            node = child.get();
        }
        return register_key(node->cbits);
    }

   private:
    struct Node {
        Sim sim;
        std::vector<uint8_t> cbits;
        size_t next_op;
        double p_plus;
        std::array<std::unique_ptr<Node>, 2> children;
    };

    void settle(Node &node, size_t from) {
        node.next_op = advance(circuit_, node.sim, node.cbits, from);
        if (node.next_op < circuit_.ops.size()) {
            node.p_plus = node.sim.p_plus(std::get<Measure>(circuit_.ops[node.next_op]));
        }
    }

    void descend(Node &node, const Measure &m, size_t op_index, int outcome) {
        try {
            node.sim.collapse(m, outcome);
        } catch (const Error &e) {
            throw Error(e.code(), e.what(), std::nullopt, op_index);
        }
        node.cbits[m.cbit] = outcome == -1;
        settle(node, op_index + 1);
    }

    std::string finish_uncached(Node node, Rng &rng) {
        while (node.next_op < circuit_.ops.size()) {
            const size_t at = node.next_op;
            const auto &m = std::get<Measure>(circuit_.ops[at]);
            descend(node, m, at, sample_outcome(node.p_plus, rng.uniform()));
        }
        return register_key(node.cbits);
    }

    const Circuit &circuit_;
    size_t budget_;
    size_t used_ = 0;
    std::unique_ptr<Node> root_;
};

template <class Sim>
RunResult run_shots(BackendId id, const Circuit &circuit, uint64_t shots, uint64_t seed, const RunOptions &options) {
    RunResult result;
    result.backend = backend_name(id);
    result.shots = shots;
    result.seed = seed;
    result.rng_id = Rng::kAlgorithmId;
    result.final_state_available = !circuit.has_measurements();
    if (shots == 0) {
        return result;
    }
    ShotTree<Sim> tree(circuit, Sim(circuit.n_qubits), options.cache_bytes);
    for (uint64_t s = 0; s < shots; s++) {
        Rng rng = Rng::for_stream(seed, s);
        result.counts[tree.shot(rng)]++;
    }
    return result;
}

void require_gk(const Circuit &circuit) {
    auto gk = classify_gottesman_knill(circuit);
    if (!gk.is_gk) {
        throw Error(ErrorCode::kNonClifford, "op is outside the Gottesman-Knill set", std::nullopt,
                    gk.first_offender);
    }
}

template <class Sim>
std::vector<MeasurementRecord> trace(const Circuit &circuit, const OutcomeChooser &choose) {
    Sim sim(circuit.n_qubits);
    std::vector<uint8_t> cbits(circuit.n_cbits, 0);
    std::vector<MeasurementRecord> records;
    size_t pos = advance(circuit, sim, cbits, 0);
    while (pos < circuit.ops.size()) {
        const auto &m = std::get<Measure>(circuit.ops[pos]);
        double p = sim.p_plus(m);
        int outcome = choose(p, records.size());
        records.push_back({pos, p, outcome});
        sim.collapse(m, outcome);
        cbits[m.cbit] = outcome == -1;
        pos = advance(circuit, sim, cbits, pos + 1);
    }
    return records;
}

}  // namespace

RunResult run_statevector(const Circuit &circuit, uint64_t shots, uint64_t seed, const RunOptions &options) {
    require_valid(circuit);
    if (circuit.n_qubits > PureState::kMaxQubits) {
        throw Error(ErrorCode::kTooManyQubits, "dense backend supports at most 24 qubits");
    }
    return run_shots<DenseSim>(BackendId::kStateVector, circuit, shots, seed, options);
}

RunResult run_stabilizer(const Circuit &circuit, uint64_t shots, uint64_t seed, const RunOptions &options) {
    require_valid(circuit);
    require_gk(circuit);
    return run_shots<StabilizerSim>(BackendId::kStabilizer, circuit, shots, seed, options);
}

RunResult run_backend(BackendId backend, const Circuit &circuit, uint64_t shots, uint64_t seed,
                      const RunOptions &options) {
    return backend == BackendId::kStateVector ? run_statevector(circuit, shots, seed, options)
                                              : run_stabilizer(circuit, shots, seed, options);
}

BackendId choose_backend(const Circuit &circuit) {
    return classify_gottesman_knill(circuit).is_gk ? BackendId::kStabilizer : BackendId::kStateVector;
}

PureState final_statevector(const Circuit &circuit) {
    require_valid(circuit);
    if (circuit.has_measurements()) {
        throw Error(ErrorCode::kBadParams, "circuit with measurements has no single final state");
    }
    DenseSim sim(circuit.n_qubits);
    advance(circuit, sim, std::vector<uint8_t>(circuit.n_cbits, 0), 0);
    return std::move(sim.state);
}

Tableau final_tableau(const Circuit &circuit) {
    require_valid(circuit);
    require_gk(circuit);
    if (circuit.has_measurements()) {
        throw Error(ErrorCode::kBadParams, "circuit with measurements has no single final state");
    }
    StabilizerSim sim(circuit.n_qubits);
    advance(circuit, sim, std::vector<uint8_t>(circuit.n_cbits, 0), 0);
    return std::move(sim.tableau);
}

std::vector<MeasurementRecord> trace_statevector(const Circuit &circuit, const OutcomeChooser &choose) {
    require_valid(circuit);
    return trace<DenseSim>(circuit, choose);
}

std::vector<MeasurementRecord> trace_stabilizer(const Circuit &circuit, const OutcomeChooser &choose) {
    require_valid(circuit);
    require_gk(circuit);
    return trace<StabilizerSim>(circuit, choose);
}

}  // namespace qsim
