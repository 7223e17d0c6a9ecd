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

#include "qsim/pauli_string.h"

#include <algorithm>
#include <bit>

#include "qsim/error.h"

namespace qsim {

PauliString::PauliString(size_t n_qubits) : n_(n_qubits), xs_((n_qubits + 63) / 64, 0), zs_((n_qubits + 63) / 64, 0) {
}

PauliString PauliString::from_text(std::string_view text) {
    uint8_t phase = 0;
    if (!text.empty() && text[0] == '+') {
        text.remove_prefix(1);
    } else if (!text.empty() && text[0] == '-') {
        phase = 2;
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        phase = (phase + 1) & 3;
        text.remove_prefix(1);
    }
    PauliString p(text.size());
    p.phase_ = phase;
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case '_':
            case 'I':
                break;
            case 'X':
                p.set(q, true, false);
                break;
            case 'Y':
                p.set(q, true, true);
                break;
            case 'Z':
                p.set(q, false, true);
                break;
            default:
                throw Error(ErrorCode::kSyntax, "bad Pauli character '" + std::string(1, text[q]) + "'");
        }
    }
    return p;
}

void PauliString::set(size_t q, bool x, bool z) {
    const uint64_t bit = uint64_t{1} << (q & 63);
    xs_[q >> 6] = x ? (xs_[q >> 6] | bit) : (xs_[q >> 6] & ~bit);
    zs_[q >> 6] = z ? (zs_[q >> 6] | bit) : (zs_[q >> 6] & ~bit);
}

uint8_t product_phase_exponent(std::span<const uint64_t> x1, std::span<const uint64_t> z1,
                               std::span<const uint64_t> x2, std::span<const uint64_t> z2) {
    // Per qubit, the single-qubit product contributes +1 for XY, YZ, ZX and
    // -1 for XZ, YX, ZY (left factor first).
    int total = 0;
    for (size_t w = 0; w < x1.size(); w++) {
        const uint64_t a = x1[w], b = z1[w], c = x2[w], d = z2[w];
        const uint64_t plus = (a & ~b & c & d) | (a & b & ~c & d) | (~a & b & c & ~d);
        const uint64_t minus = (a & ~b & ~c & d) | (a & b & c & ~d) | (~a & b & c & d);
        total += std::popcount(plus) - std::popcount(minus);
    }
    return static_cast<uint8_t>(((total % 4) + 4) % 4);
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.n_ != n_) {
        throw Error(ErrorCode::kBadParams, "Pauli strings differ in length");
    }
    uint8_t g = product_phase_exponent(xs_, zs_, rhs.xs_, rhs.zs_);
    phase_ = (phase_ + rhs.phase_ + g) & 3;
    for (size_t w = 0; w < xs_.size(); w++) {
        xs_[w] ^= rhs.xs_[w];
        zs_[w] ^= rhs.zs_[w];
    }
    return *this;
}

bool PauliString::commutes(const PauliString &other) const {
    size_t parity = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        parity += std::popcount((xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w]));
    }
    return parity % 2 == 0;
}

bool PauliString::has_x_part() const {
    for (uint64_t w : xs_) {
        if (w != 0) {
            return true;
        }
    }
    return false;
}

void PauliString::apply_to(std::span<Complex> amplitudes) const {
    if (amplitudes.size() != (uint64_t{1} << n_)) {
        throw Error(ErrorCode::kBadParams, "amplitude vector size does not match Pauli string");
    }
    uint64_t xmask = 0, zmask = 0;
    size_t ys = 0;
    for (size_t q = 0; q < n_; q++) {
        const uint64_t bit = uint64_t{1} << (n_ - 1 - q);
        if (x(q)) {
            xmask |= bit;
        }
        if (z(q)) {
            zmask |= bit;
        }
        if (x(q) && z(q)) {
            ys++;
        }
    }
    static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<Complex> out(amplitudes.size());
    for (uint64_t k = 0; k < amplitudes.size(); k++) {
        // Y|b> = i (-1)^b |b^1>, Z|b> = (-1)^b |b>, X|b> = |b^1>.
        size_t exponent = phase_ + ys + 2 * (std::popcount(k & zmask) & 1);
        out[k ^ xmask] = kPowers[exponent & 3] * amplitudes[k];
    }
    std::copy(out.begin(), out.end(), amplitudes.begin());
}

std::string PauliString::str() const {
    static const char *kPhase[4] = {"+", "+i", "-", "-i"};
    std::string out = kPhase[phase_];
    for (size_t q = 0; q < n_; q++) {
        out.push_back("_XZY"[x(q) + 2 * z(q)]);
    }
    return out;
}

}  // namespace qsim
