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

#ifndef QSIM_STATE_VECTOR_H
#define QSIM_STATE_VECTOR_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qsim/circuit.h"
#include "qsim/gates.h"
#include "qsim/rng.h"

namespace qsim {

/// Measurement axis on the Bloch sphere: polar angle theta in [0, pi] and
/// azimuth phi in [0, 2 pi). The observable is
/// cos(theta) Z + sin(theta) cos(phi) X + sin(theta) sin(phi) Y.
struct BlochAxis {
    double theta;
    double phi;

    bool operator==(const BlochAxis &) const = default;
};

/// Axis in the equatorial X-Y plane at the given azimuth (any real angle,
/// reduced into [0, 2 pi)).
BlochAxis equatorial_axis(double azimuth);

using MeasurementAxis = std::variant<PauliAxis, BlochAxis>;

std::string axis_label(const MeasurementAxis &axis);

struct MeasurementSpec {
    size_t qubit;
    MeasurementAxis axis;
};

/// Dense amplitude vector over n qubits. Qubit 0 is the leftmost tensor
/// factor: basis index x is the big-endian bit string q0 q1 ... q_{n-1}.
class PureState {
   public:
    static constexpr size_t kMaxQubits = 24;

    /// |0...0>; throws TooManyQubits above kMaxQubits.
    explicit PureState(size_t n_qubits);

    /// Takes ownership of `amplitudes` (length 2^n, unit norm within 1e-10).
    static PureState from_amplitudes(std::vector<Complex> amplitudes);

    size_t num_qubits() const {
        return n_;
    }
    std::span<const Complex> amplitudes() const {
        return amps_;
    }
    Complex amplitude(uint64_t index) const {
        return amps_[index];
    }
    double norm_squared() const;

    void apply_gate(GateKind kind, std::span<const size_t> targets);
    void apply_gate_adjoint(GateKind kind, std::span<const size_t> targets);
    void apply_oracle(const BooleanFunction &f, std::span<const size_t> inputs, size_t output);

    /// Born probability of the +1 eigenvalue of the measured observable.
    double p_plus(const MeasurementSpec &spec) const;

    /// Projects onto the eigenspace of `outcome` (+1 or -1) and renormalizes.
    /// Throws DegenerateNorm if that branch has probability below 1e-12.
    void collapse(const MeasurementSpec &spec, int outcome);

    /// Unnormalized projection; used for exact joint distributions.
    void project(const MeasurementSpec &spec, int outcome);

    size_t memory_bytes() const {
        return amps_.size() * sizeof(Complex);
    }

   private:
    PureState(size_t n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {
    }
    uint64_t mask(size_t qubit) const;
    void apply_single(const GateMatrix &m, size_t qubit);

    size_t n_;
    std::vector<Complex> amps_;
};

PureState init_state(size_t n);

/// Applies a GateApp or OracleApp. A conditioned gate is the identity unless
/// its classical bit is 1. Measurements are rejected with BadParams.
void apply_op(PureState &state, const CircuitOp &op, std::span<const uint8_t> cbits);

struct MeasureResult {
    int outcome;
    PureState collapsed;
    double p_plus;
};

/// Samples a projective measurement. Probabilities within 1e-12 of 0 or 1 are
/// snapped so that impossible branches are never selected.
MeasureResult measure(PureState state, const MeasurementSpec &spec, Rng &rng);

/// Outcome sampling rule shared by every backend: +1 iff u < p_plus.
int sample_outcome(double p_plus, double u);

/// Exact joint distribution over the 2^k outcome tuples of `specs`.
/// Tuple index: spec 0 is the most significant bit; bit value 1 means outcome -1.
std::vector<double> joint_probabilities(const PureState &state, std::span<const MeasurementSpec> specs);

/// True iff some unit c has max_x |a_x - c b_x| <= tol. c is fixed from the
/// first amplitude of `a` with magnitude above 1e-8.
bool equal_up_to_global_phase(const PureState &a, const PureState &b, double tol);

/// (|01> - |10>)/sqrt(2).
PureState singlet_state();

/// (|0..0> + |1..1>)/sqrt(2).
PureState ghz_state(size_t n);

}  // namespace qsim

#endif
