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

#include <cmath>
#include <set>

#include "gtest/gtest.h"

using namespace qsim;

TEST(rng, splitmix64_reference) {
    uint64_t state = 0;
    ASSERT_EQ(splitmix64(state), 0xE220A8397B1DCDAFULL);
}

TEST(rng, reference_outputs) {
    Rng a(0);
    ASSERT_EQ(a(), 0x99EC5F36CB75F2B4ULL);
    ASSERT_EQ(a(), 0xBF6E1F784956452AULL);
    ASSERT_EQ(a(), 0x1A5F849D4933E6E0ULL);
    Rng b(12345);
    ASSERT_EQ(b(), 0xBE6A36374160D49BULL);
    ASSERT_EQ(b(), 0x214AAA0637A688C6ULL);
    Rng c = Rng::for_stream(7, 3);
    ASSERT_EQ(c(), 0xE85AF886FCE35AB1ULL);
    ASSERT_EQ(c(), 0xABD829E60D0CE4C6ULL);
}

TEST(rng, streams_are_distinct) {
    std::set<uint64_t> firsts;
    for (uint64_t s = 0; s < 1000; s++) {
        firsts.insert(Rng::for_stream(42, s)());
    }
    ASSERT_EQ(firsts.size(), 1000u);
    ASSERT_NE(Rng::for_stream(1, 0)(), Rng::for_stream(2, 0)());
}

TEST(rng, uniform_range_and_mean) {
    Rng rng(5);
    double total = 0;
    for (int k = 0; k < 100000; k++) {
        double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        total += u;
    }
    ASSERT_NEAR(total / 100000, 0.5, 0.005);
}

TEST(rng, below_is_unbiased) {
    Rng rng(9);
    std::vector<int> counts(3, 0);
    for (int k = 0; k < 30000; k++) {
        auto v = rng.below(3);
        ASSERT_LT(v, 3u);
        counts[v]++;
    }
    for (int c : counts) {
        ASSERT_NEAR(c, 10000, 5 * std::sqrt(30000 * (1.0 / 3) * (2.0 / 3)));
    }
    ASSERT_EQ(rng.below(1), 0u);
}

TEST(rng, algorithm_id) {
    ASSERT_EQ(Rng::kAlgorithmId, "xoshiro256ss-splitmix64-v1");
}
