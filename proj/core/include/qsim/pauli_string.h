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

#ifndef QSIM_PAULI_STRING_H
#define QSIM_PAULI_STRING_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsim/gates.h"

namespace qsim {

/// i^phase * P_0 (x) P_1 (x) ... with each P_q in {I, X, Y, Z} encoded as
/// (x, z) bits: I=(0,0), X=(1,0), Z=(0,1), Y=(1,1). Bits are packed 64 per word.
class PauliString {
   public:
    explicit PauliString(size_t n_qubits);

    /// Parses "+XZ_Y", "-XIZ", "iZ", ... ('_' and 'I' both mean identity).
    static PauliString from_text(std::string_view text);

    size_t num_qubits() const {
        return n_;
    }
    size_t num_words() const {
        return xs_.size();
    }

    bool x(size_t q) const {
        return (xs_[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs_[q >> 6] >> (q & 63)) & 1;
    }
    void set(size_t q, bool x, bool z);

    /// Exponent of i in the overall phase, 0..3.
    uint8_t phase() const {
        return phase_;
    }
    void set_phase(uint8_t phase) {
        phase_ = phase & 3;
    }
    bool is_hermitian() const {
        return (phase_ & 1) == 0;
    }
    bool negative() const {
        return phase_ == 2;
    }

    std::span<uint64_t> xs() {
        return xs_;
    }
    std::span<uint64_t> zs() {
        return zs_;
    }
    std::span<const uint64_t> xs() const {
        return xs_;
    }
    std::span<const uint64_t> zs() const {
        return zs_;
    }

    /// this <- this * rhs, tracking the phase exactly.
    PauliString &operator*=(const PauliString &rhs);

    bool commutes(const PauliString &other) const;
    bool has_x_part() const;

    /// Acts on a dense big-endian amplitude vector of matching qubit count.
    void apply_to(std::span<Complex> amplitudes) const;

    std::string str() const;

    bool operator==(const PauliString &) const = default;

   private:
    size_t n_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    uint8_t phase_ = 0;
};

/// Sum over qubits of the AG phase function g for the product
/// (x1,z1) * (x2,z2), reduced mod 4. Exposed for the tableau's row products.
uint8_t product_phase_exponent(std::span<const uint64_t> x1, std::span<const uint64_t> z1,
                               std::span<const uint64_t> x2, std::span<const uint64_t> z2);

}  // namespace qsim

#endif
