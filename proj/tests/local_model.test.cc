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

#include "qsim/local_model.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "qsim/bench.h"
#include "qsim/library.h"
#include "test_util.h"

using namespace qsim;

static const Setting X = PauliAxis::kX;
static const Setting Y = PauliAxis::kY;
static const Setting Z = PauliAxis::kZ;

namespace {

void check_model_reproduces(const LocalModelSearch &s, const CorrelationTable &target, double tol) {
    ASSERT_TRUE(s.feasible);
    ASSERT_TRUE(s.model.has_value());
    validate_model(*s.model);
    auto t = model_table(*s.model);
    ASSERT_EQ(t.probabilities().size(), target.probabilities().size());
    for (size_t r = 0; r < t.probabilities().size(); r++) {
        ASSERT_NEAR(t.probabilities()[r], target.probabilities()[r], tol);
    }
}

void check_certificate(const LocalModelSearch &s, const CorrelationTable &target) {
    ASSERT_FALSE(s.feasible);
    ASSERT_TRUE(s.certificate.has_value());
    const auto &ineq = *s.certificate;
    std::vector<size_t> sizes;
    for (const auto &a : target.alphabets()) {
        sizes.push_back(a.size());
    }
    CommTopology topo;
    for (const auto &st : enumerate_strategies(target.parties(), sizes, topo)) {
        ASSERT_LE(inequality_value(ineq, strategy_table(st, topo, target.alphabets())), ineq.bound + 1e-9);
    }
    ASSERT_GT(inequality_value(ineq, target) - ineq.bound, 1e-6);
    ASSERT_NEAR(ineq.violation, inequality_value(ineq, target) - ineq.bound, 1e-9);
}

// Every entry within 5 binomial standard deviations of the exact table.
void check_sampled(const SimulationResult &r, const CorrelationTable &exact) {
    for (size_t k = 0; k < exact.profile_count(); k++) {
        double shots = static_cast<double>(r.profile_shots[k]);
        ASSERT_GT(shots, 0);
        auto got = r.empirical.distribution(k);
        auto want = exact.distribution(k);
        for (size_t o = 0; o < want.size(); o++) {
            double sigma = std::sqrt(want[o] * (1 - want[o]) / shots);
            ASSERT_LE(std::abs(got[o] - want[o]), 5 * sigma + 1e-12);
        }
    }
}

}  // namespace

TEST(singlet_pauli_lhv, reproduces_quantum_table_exactly) {
    auto model = singlet_pauli_lhv();
    ASSERT_EQ(model.strategies.size(), 8u);
    auto t = model_table(model);
    auto q = quantum_table(singlet_state(), pauli_alphabets(2));
    for (size_t r = 0; r < q.probabilities().size(); r++) {
        ASSERT_NEAR(t.probabilities()[r], q.probabilities()[r], 1e-12);
    }
    for (const auto &a : {X, Y, Z}) {
        for (const auto &b : {X, Y, Z}) {
            ASSERT_EQ(correlator(t, {a, b}), a == b ? -1.0 : 0.0);
        }
    }
}

TEST(find_local_model, singlet_paulis_without_communication) {
    auto q = quantum_table(singlet_state(), pauli_alphabets(2));
    auto s = find_local_model(q, CommTopology());
    ASSERT_TRUE(s.exact);
    ASSERT_EQ(s.strategies_considered, 64u);
    check_model_reproduces(s, q, 1e-12);
    Rational total = 0;
    for (const auto &w : s.model->exact_weights) {
        total += w;
    }
    ASSERT_EQ(total, 1);
}

TEST(find_local_model, ghz3_needs_communication) {
    auto q = quantum_table(ghz_state(3), pauli_alphabets(3));
    auto s = find_local_model(q, CommTopology());
    ASSERT_TRUE(s.exact);
    ASSERT_EQ(s.strategies_considered, 512u);
    check_certificate(s, q);
}

TEST(find_local_model, ghz3_with_one_bit) {
    auto q = quantum_table(ghz_state(3), pauli_alphabets(3));
    auto topo = CommTopology::parse("2>1");
    auto s = find_local_model(q, topo);
    ASSERT_TRUE(s.exact);
    ASSERT_EQ(s.strategies_considered, 32768u);
    check_model_reproduces(s, q, 1e-9);
    ASSERT_EQ(s.model->topology.budget(), 1u);
    auto m = mermin_correlators(model_table(*s.model));
    ASSERT_NEAR(m[0] * m[1] * m[2] * m[3], -1.0, 1e-9);
}

TEST(find_local_model, chsh_angles_are_nonlocal) {
    auto a = equatorial_axis(0);
    auto a2 = equatorial_axis(std::numbers::pi / 2);
    auto b = equatorial_axis(std::numbers::pi / 4);
    auto b2 = equatorial_axis(-std::numbers::pi / 4);
    auto q = quantum_table(singlet_state(), {{a, a2}, {b, b2}});
    ASSERT_FALSE(dyadic_probabilities(q).has_value());
    auto s = find_local_model(q, CommTopology());
    ASSERT_FALSE(s.exact);
    check_certificate(s, q);
}

TEST(find_local_model, aligned_angles_are_local) {
    auto a = equatorial_axis(0.3);
    auto b = equatorial_axis(1.1);
    auto q = quantum_table(singlet_state(), {{a, b}, {a, b}});
    auto s = find_local_model(q, CommTopology());
    ASSERT_FALSE(s.exact);
    check_model_reproduces(s, q, 1e-9);
}

TEST(find_local_model, random_mixtures_are_feasible) {
    Rng rng(3);
    std::vector<size_t> sizes{2, 3};
    auto alphabets = Alphabets{{X, Z}, {X, Y, Z}};
    auto all = enumerate_strategies(2, sizes, CommTopology());
    for (int trial = 0; trial < 30; trial++) {
        std::vector<double> mix(alphabets[0].size() * alphabets[1].size() * 4, 0.0);
        size_t k = 1 + rng.below(5);
        for (size_t i = 0; i < k; i++) {
            auto t = strategy_table(all[rng.below(all.size())], CommTopology(), alphabets);
            for (size_t r = 0; r < mix.size(); r++) {
                mix[r] += t.probabilities()[r] / static_cast<double>(k);
            }
        }
        CorrelationTable target(alphabets, mix);
        SearchOptions opts;
        opts.arithmetic = trial % 2 ? Arithmetic::kFloating : Arithmetic::kAuto;
        auto s = find_local_model(target, CommTopology(), opts);
        check_model_reproduces(s, target, 1e-9);
    }
}

TEST(find_local_model, random_states_are_decided_soundly) {
    Rng rng(4);
    size_t infeasible = 0;
    for (int trial = 0; trial < 20; trial++) {
        auto st = gen::random_state(2, rng);
        Alphabets alphabets(2);
        for (auto &a : alphabets) {
            a = {BlochAxis{rng.uniform() * 3, rng.uniform() * 6}, BlochAxis{rng.uniform() * 3, rng.uniform() * 6}};
        }
        auto q = quantum_table(st, alphabets);
        auto s = find_local_model(q, CommTopology());
        if (s.feasible) {
            check_model_reproduces(s, q, 1e-8);
        } else {
            infeasible++;
            check_certificate(s, q);
        }
    }
    (void)infeasible;
}

TEST(find_local_model, signalling_table_is_not_local) {
    Alphabets ab{{X, Z}, {X}};
    CorrelationTable t(ab, {1, 0, 0, 0, 0, 0, 0, 1});
    auto s = find_local_model(t, CommTopology());
    check_certificate(s, t);
    auto s1 = find_local_model(t, CommTopology::parse("1>2"));
    check_model_reproduces(s1, t, 1e-12);
}

TEST(dyadic_probabilities, exact_values) {
    auto q = quantum_table(ghz_state(3), pauli_alphabets(3));
    auto d = dyadic_probabilities(q);
    ASSERT_TRUE(d.has_value());
    ASSERT_EQ((*d)[0], Rational(1, 4));
}

TEST(validate_model, rejects_bad_weights) {
    auto m = singlet_pauli_lhv();
    m.weights[0] = 0.5;
    ASSERT_THROW(validate_model(m), Error);
    m = singlet_pauli_lhv();
    m.weights.pop_back();
    ASSERT_THROW(validate_model(m), Error);
    m = singlet_pauli_lhv();
    m.weights[0] = -0.125;
    m.weights[1] = 0.375;
    ASSERT_THROW(validate_model(m), Error);
}

TEST(simulate_model, singlet) {
    auto model = singlet_pauli_lhv();
    auto r = simulate_model(model, 100000, 1);
    ASSERT_EQ(r.bits_used_per_shot, 0u);
    check_sampled(r, model_table(model));
    auto again = simulate_model(model, 100000, 1);
    ASSERT_EQ(again.empirical.probabilities(), r.empirical.probabilities());
}

TEST(simulate_model, ghz3_with_one_bit) {
    auto q = quantum_table(ghz_state(3), pauli_alphabets(3));
    auto s = find_local_model(q, CommTopology::parse("2>1"));
    ASSERT_TRUE(s.feasible);
    auto r = simulate_model(*s.model, 100000, 9);
    ASSERT_EQ(r.bits_used_per_shot, 1u);
    auto m = mermin_correlators(r.empirical);
    ASSERT_NEAR(m[0], 1, 0.02);
    ASSERT_NEAR(m[1], -1, 0.02);
    ASSERT_NEAR(m[2], -1, 0.02);
    ASSERT_NEAR(m[3], -1, 0.02);
    check_sampled(r, q);
}
