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

#include "qsim/rng.h"

namespace qsim {

uint64_t splitmix64(uint64_t &state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

static inline uint64_t rotl(uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

Rng::Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto &word : s_) {
        word = splitmix64(sm);
    }
}

Rng Rng::for_stream(uint64_t seed, uint64_t stream) {
    uint64_t sm = seed;
    uint64_t base = splitmix64(sm);
    uint64_t st = stream;
    return Rng(base ^ splitmix64(st));
}

Rng::result_type Rng::operator()() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

uint64_t Rng::below(uint64_t bound) {
    // Rejection sampling removes modulo bias.
    const uint64_t limit = max() - max() % bound;
    uint64_t x;
    do {
        x = (*this)();
    } while (x >= limit);
    return x % bound;
}

}  // namespace qsim
