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

#ifndef QSIM_BACKENDS_H
#define QSIM_BACKENDS_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsim/circuit.h"
#include "qsim/state_vector.h"
#include "qsim/tableau.h"

namespace qsim {

enum class BackendId { kStateVector, kStabilizer };

std::string_view backend_name(BackendId id);

struct RunResult {
    std::string backend;
    uint64_t shots = 0;
    uint64_t seed = 0;
    std::string rng_id;
    /// Keyed by the classical register, c0 first.
    std::map<std::string, uint64_t> counts;
    /// True when the circuit is measurement-free, so one final state exists.
    bool final_state_available = false;

    bool operator==(const RunResult &) const = default;
};

struct RunOptions {
    /// Byte budget for states cached along shared measurement prefixes.
    /// Caching never changes results, only the work done per shot.
    size_t cache_bytes = size_t{256} << 20;
};

/// Dense backend. Each shot restarts from |0...0> with zeroed classical bits
/// and draws from RNG stream `shot index` of `seed`.
RunResult run_statevector(const Circuit &circuit, uint64_t shots, uint64_t seed, const RunOptions &options = {});

/// Tableau backend; throws NonClifford (with the op index) unless the
/// circuit is in the Gottesman-Knill set.
RunResult run_stabilizer(const Circuit &circuit, uint64_t shots, uint64_t seed, const RunOptions &options = {});

RunResult run_backend(BackendId backend, const Circuit &circuit, uint64_t shots, uint64_t seed,
                      const RunOptions &options = {});

/// Stabilizer when the circuit is in the Gottesman-Knill set, dense otherwise.
BackendId choose_backend(const Circuit &circuit);

/// Final state of a measurement-free circuit.
PureState final_statevector(const Circuit &circuit);
Tableau final_tableau(const Circuit &circuit);

struct MeasurementRecord {
    size_t op_index;
    double p_plus;
    int outcome;
};

/// Executes one shot and reports every measurement's +1 probability.
/// `choose` maps (p_plus, measurement ordinal) to the outcome to follow;
/// it must only pick outcomes of nonzero probability.
using OutcomeChooser = std::function<int(double p_plus, size_t ordinal)>;

std::vector<MeasurementRecord> trace_statevector(const Circuit &circuit, const OutcomeChooser &choose);
std::vector<MeasurementRecord> trace_stabilizer(const Circuit &circuit, const OutcomeChooser &choose);

}  // namespace qsim

#endif
