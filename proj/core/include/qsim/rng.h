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

#ifndef QSIM_RNG_H
#define QSIM_RNG_H

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace qsim {

/// xoshiro256** seeded through SplitMix64.
///
/// Streams are derived from a (seed, stream index) pair so that shot k of a
/// run always draws the same numbers regardless of how shots are scheduled.
/// Only the raw 64-bit output and the conversions below are used, never
/// std:: distributions, so results are identical across standard libraries.
class Rng {
   public:
    using result_type = uint64_t;

    static constexpr std::string_view kAlgorithmId = "xoshiro256ss-splitmix64-v1";

    explicit Rng(uint64_t seed);

    static Rng for_stream(uint64_t seed, uint64_t stream);

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()();

    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform();

    /// Uniform in [0, bound); bound must be > 0.
    uint64_t below(uint64_t bound);

   private:
    std::array<uint64_t, 4> s_;
};

uint64_t splitmix64(uint64_t &state);

}  // namespace qsim

#endif
