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

#include "qsim/state_vector.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace qsim {

namespace {

constexpr double kBranchCutoff = 1e-12;

struct Observable {
    Complex m00, m01, m10, m11;
};

Observable observable(const MeasurementAxis &axis) {
    const Complex i{0, 1};
    if (const auto *p = std::get_if<PauliAxis>(&axis)) {
        switch (*p) {
            case PauliAxis::kX:
                return {0, 1, 1, 0};
            case PauliAxis::kY:
                return {0, -i, i, 0};
            case PauliAxis::kZ:
                return {1, 0, 0, -1};
        }
    }
    const auto &b = std::get<BlochAxis>(axis);
    if (!(b.theta >= 0 && b.theta <= std::numbers::pi && b.phi >= 0 && b.phi < 2 * std::numbers::pi)) {
        throw Error(ErrorCode::kBadParams, "Bloch axis needs theta in [0, pi] and phi in [0, 2 pi)");
    }
    double c = std::cos(b.theta);
    double s = std::sin(b.theta);
    return {c, s * std::polar(1.0, -b.phi), s * std::polar(1.0, b.phi), -c};
}

}  // namespace

BlochAxis equatorial_axis(double azimuth) {
    double phi = std::fmod(azimuth, 2 * std::numbers::pi);
    if (phi < 0) {
        phi += 2 * std::numbers::pi;
    }
    if (phi >= 2 * std::numbers::pi) {
        phi = 0;
    }
    return BlochAxis{std::numbers::pi / 2, phi};
}

std::string axis_label(const MeasurementAxis &axis) {
    if (const auto *p = std::get_if<PauliAxis>(&axis)) {
        return std::string(1, axis_name(*p));
    }
    const auto &b = std::get<BlochAxis>(axis);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "bloch(%.12g,%.12g)", b.theta, b.phi);
    return buf;
}

PureState::PureState(size_t n_qubits) : n_(n_qubits) {
    if (n_qubits < 1) {
        throw Error(ErrorCode::kBadParams, "a state needs at least one qubit");
    }
    if (n_qubits > kMaxQubits) {
        throw Error(ErrorCode::kTooManyQubits, "dense backend supports at most " + std::to_string(kMaxQubits) +
                                                   " qubits, got " + std::to_string(n_qubits));
    }
    amps_.assign(uint64_t{1} << n_qubits, Complex{0, 0});
    amps_[0] = 1;
}

PureState PureState::from_amplitudes(std::vector<Complex> amplitudes) {
    size_t n = 0;
    while ((uint64_t{1} << n) < amplitudes.size()) {
        n++;
    }
    if (amplitudes.size() < 2 || (uint64_t{1} << n) != amplitudes.size()) {
        throw Error(ErrorCode::kBadParams, "amplitude count must be a power of two >= 2");
    }
    if (n > kMaxQubits) {
        throw Error(ErrorCode::kTooManyQubits, "too many amplitudes");
    }
    PureState s(n, std::move(amplitudes));
    if (std::abs(s.norm_squared() - 1) > 1e-10) {
        throw Error(ErrorCode::kDegenerateNorm, "amplitudes are not unit norm");
    }
    return s;
}

double PureState::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

uint64_t PureState::mask(size_t qubit) const {
    if (qubit >= n_) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "qubit " + std::to_string(qubit) + " on a " + std::to_string(n_) + "-qubit state");
    }
    return uint64_t{1} << (n_ - 1 - qubit);
}

void PureState::apply_single(const GateMatrix &m, size_t qubit) {
    const uint64_t bit = mask(qubit);
    const uint64_t size = amps_.size();
    const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    for (uint64_t base = 0; base < size; base += 2 * bit) {
        for (uint64_t k = base; k < base + bit; k++) {
            Complex a0 = amps_[k];
            Complex a1 = amps_[k | bit];
            amps_[k] = m00 * a0 + m01 * a1;
            amps_[k | bit] = m10 * a0 + m11 * a1;
        }
    }
}

void PureState::apply_gate(GateKind kind, std::span<const size_t> targets) {
    if (targets.size() != gate_arity(kind)) {
        throw Error(ErrorCode::kArityMismatch, std::string(gate_name(kind)) + " arity mismatch");
    }
    const uint64_t size = amps_.size();
    switch (kind) {
        case GateKind::kI:
            mask(targets[0]);
            return;
        case GateKind::kX: {
            const uint64_t bit = mask(targets[0]);
            for (uint64_t base = 0; base < size; base += 2 * bit) {
                for (uint64_t k = base; k < base + bit; k++) {
                    std::swap(amps_[k], amps_[k | bit]);
                }
            }
            return;
        }
        case GateKind::kZ:
        case GateKind::kR:
        case GateKind::kS: {
            const uint64_t bit = mask(targets[0]);
            const Complex phase = gate_matrix(kind)(1, 1);
            for (uint64_t k = 0; k < size; k++) {
                if (k & bit) {
                    amps_[k] *= phase;
                }
            }
            return;
        }
        case GateKind::kCnot: {
            const uint64_t control = mask(targets[0]);
            const uint64_t target = mask(targets[1]);
            if (control == target) {
                throw Error(ErrorCode::kDuplicateQubit, "cnot control and target coincide");
            }
            for (uint64_t k = 0; k < size; k++) {
                if ((k & control) && !(k & target)) {
                    std::swap(amps_[k], amps_[k | target]);
                }
            }
            return;
        }
        case GateKind::kY:
        case GateKind::kH:
            apply_single(gate_matrix(kind), targets[0]);
            return;
    }
}

void PureState::apply_gate_adjoint(GateKind kind, std::span<const size_t> targets) {
    if (kind == GateKind::kR || kind == GateKind::kS) {
        if (targets.size() != 1) {
            throw Error(ErrorCode::kArityMismatch, std::string(gate_name(kind)) + " arity mismatch");
        }
        apply_single(adjoint(gate_matrix(kind)), targets[0]);
        return;
    }
    // The remaining gates are Hermitian.
    apply_gate(kind, targets);
}

void PureState::apply_oracle(const BooleanFunction &f, std::span<const size_t> inputs, size_t output) {
    if (inputs.size() != f.arity()) {
        throw Error(ErrorCode::kArityMismatch, "oracle input count differs from function arity");
    }
    std::vector<uint64_t> input_masks;
    for (size_t q : inputs) {
        input_masks.push_back(mask(q));
    }
    const uint64_t out = mask(output);
    for (uint64_t m : input_masks) {
        if (m == out) {
            throw Error(ErrorCode::kDuplicateQubit, "oracle output is also an input");
        }
    }
    const uint64_t size = amps_.size();
    for (uint64_t k = 0; k < size; k++) {
        if (k & out) {
            continue;
        }
        uint64_t x = 0;
        for (uint64_t m : input_masks) {
            x = (x << 1) | ((k & m) ? 1 : 0);
        }
        if (f(x)) {
            std::swap(amps_[k], amps_[k | out]);
        }
    }
}

double PureState::p_plus(const MeasurementSpec &spec) const {
    const uint64_t bit = mask(spec.qubit);
    const Observable o = observable(spec.axis);
    const uint64_t size = amps_.size();
    double expectation = 0;
    for (uint64_t base = 0; base < size; base += 2 * bit) {
        for (uint64_t k = base; k < base + bit; k++) {
            Complex a0 = amps_[k];
            Complex a1 = amps_[k | bit];
            expectation += std::real(std::conj(a0) * (o.m00 * a0 + o.m01 * a1) +
                                     std::conj(a1) * (o.m10 * a0 + o.m11 * a1));
        }
    }
    double p = (1 + expectation / norm_squared()) / 2;
    return std::clamp(p, 0.0, 1.0);
}

void PureState::project(const MeasurementSpec &spec, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw Error(ErrorCode::kBadParams, "measurement outcome must be +1 or -1");
    }
    const uint64_t bit = mask(spec.qubit);
    const Observable o = observable(spec.axis);
    const double s = outcome;
    const uint64_t size = amps_.size();
    for (uint64_t base = 0; base < size; base += 2 * bit) {
        for (uint64_t k = base; k < base + bit; k++) {
            Complex a0 = amps_[k];
            Complex a1 = amps_[k | bit];
            amps_[k] = 0.5 * (a0 + s * (o.m00 * a0 + o.m01 * a1));
            amps_[k | bit] = 0.5 * (a1 + s * (o.m10 * a0 + o.m11 * a1));
        }
    }
}

void PureState::collapse(const MeasurementSpec &spec, int outcome) {
    project(spec, outcome);
    double p = norm_squared();
    if (p < kBranchCutoff) {
        throw Error(ErrorCode::kDegenerateNorm, "collapsed onto a branch of probability " + std::to_string(p));
    }
    double scale = 1 / std::sqrt(p);
    for (auto &a : amps_) {
        a *= scale;
    }
}

PureState init_state(size_t n) {
    return PureState(n);
}

void apply_op(PureState &state, const CircuitOp &op, std::span<const uint8_t> cbits) {
    if (const auto *g = std::get_if<GateApp>(&op)) {
        if (g->condition.has_value()) {
            if (*g->condition >= cbits.size()) {
                throw Error(ErrorCode::kIndexOutOfRange, "condition bit c" + std::to_string(*g->condition) +
                                                             " is not present");
            }
            if (!cbits[*g->condition]) {
                return;
            }
        }
        state.apply_gate(g->kind, g->targets);
    } else if (const auto *o = std::get_if<OracleApp>(&op)) {
        state.apply_oracle(o->function, o->inputs, o->output);
    } else {
        throw Error(ErrorCode::kBadParams, "apply_op does not execute measurements");
    }
}

int sample_outcome(double p_plus, double u) {
    if (p_plus < kBranchCutoff) {
        return -1;
    }
    if (p_plus > 1 - kBranchCutoff) {
        return 1;
    }
    return u < p_plus ? 1 : -1;
}

MeasureResult measure(PureState state, const MeasurementSpec &spec, Rng &rng) {
    double p = state.p_plus(spec);
    int outcome = sample_outcome(p, rng.uniform());
    state.collapse(spec, outcome);
    return MeasureResult{outcome, std::move(state), p};
}

namespace {

void joint_recurse(const PureState &state, std::span<const MeasurementSpec> specs, size_t depth, uint64_t tuple,
                   std::vector<double> &out) {
    if (depth == specs.size()) {
        out[tuple] = state.norm_squared();
        return;
    }
    for (int bit = 0; bit < 2; bit++) {
        PureState branch = state;
        branch.project(specs[depth], bit == 0 ? 1 : -1);
        joint_recurse(branch, specs, depth + 1, (tuple << 1) | bit, out);
    }
}

}  // namespace

std::vector<double> joint_probabilities(const PureState &state, std::span<const MeasurementSpec> specs) {
    std::vector<bool> seen(state.num_qubits(), false);
    for (const auto &spec : specs) {
        if (spec.qubit >= state.num_qubits()) {
            throw Error(ErrorCode::kIndexOutOfRange, "qubit " + std::to_string(spec.qubit) + " out of range");
        }
        if (seen[spec.qubit]) {
            throw Error(ErrorCode::kDuplicateQubit, "qubit " + std::to_string(spec.qubit) + " measured twice");
        }
        seen[spec.qubit] = true;
    }
    std::vector<double> out(uint64_t{1} << specs.size(), 0.0);
    joint_recurse(state, specs, 0, 0, out);
    return out;
}

bool equal_up_to_global_phase(const PureState &a, const PureState &b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorCode::kBadParams, "states have different qubit counts");
    }
    auto as = a.amplitudes();
    auto bs = b.amplitudes();
    Complex c{1, 0};
    for (size_t k = 0; k < as.size(); k++) {
        if (std::abs(as[k]) > 1e-8) {
            if (std::abs(bs[k]) <= 1e-8) {
                return false;
            }
            Complex ratio = as[k] / bs[k];
            c = ratio / std::abs(ratio);
            break;
        }
    }
    for (size_t k = 0; k < as.size(); k++) {
        if (std::abs(as[k] - c * bs[k]) > tol) {
            return false;
        }
    }
    return true;
}

PureState singlet_state() {
    const double h = 1 / std::sqrt(2.0);
    return PureState::from_amplitudes({0, h, -h, 0});
}

PureState ghz_state(size_t n) {
    if (n < 2 || n > PureState::kMaxQubits) {
        throw Error(ErrorCode::kBadParams, "ghz state needs 2 <= n <= 24");
    }
    std::vector<Complex> amps(uint64_t{1} << n, 0.0);
    amps.front() = amps.back() = 1 / std::sqrt(2.0);
    return PureState::from_amplitudes(std::move(amps));
}

}  // namespace qsim
