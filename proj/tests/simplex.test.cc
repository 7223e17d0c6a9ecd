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

#include "qsim/simplex.h"

#include "gtest/gtest.h"

#include "qsim/rng.h"

using namespace qsim;

namespace {

IncidenceMatrix matrix(size_t rows, const std::vector<std::vector<uint32_t>> &columns) {
    IncidenceMatrix a(rows);
    for (const auto &c : columns) {
        a.add_column(c);
    }
    return a;
}

template <class Scalar>
std::vector<Scalar> reconstruct(const IncidenceMatrix &a, const std::vector<Scalar> &w) {
    std::vector<Scalar> out(a.rows(), Scalar(0));
    for (size_t j = 0; j < a.columns(); j++) {
        for (uint32_t r : a.column(j)) {
            out[r] += w[j];
        }
    }
    return out;
}

template <class Scalar>
void check_certificate(const IncidenceMatrix &a, const std::vector<Scalar> &b,
                       const FeasibilityResult<Scalar> &res) {
    ASSERT_EQ(res.dual.size(), a.rows());
    for (size_t j = 0; j < a.columns(); j++) {
        Scalar s = 0;
        for (uint32_t r : a.column(j)) {
            s += res.dual[r];
        }
        ASSERT_LE(ScalarTraits<Scalar>::to_double(s), 1e-9);
    }
    Scalar yb = 0;
    for (size_t r = 0; r < b.size(); r++) {
        yb += res.dual[r] * b[r];
    }
    ASSERT_GT(ScalarTraits<Scalar>::to_double(yb), 1e-12);
}

}  // namespace

TEST(solve_phase_one, feasible_exact) {
    auto a = matrix(3, {{0, 2}, {1, 2}, {0, 1}});
    std::vector<Rational> b{Rational(1, 3), Rational(1, 2), Rational(5, 6)};
    auto res = solve_phase_one<Rational>(a, b);
    ASSERT_TRUE(res.feasible);
    ASSERT_EQ(reconstruct(a, res.weights), b);
    for (const auto &w : res.weights) {
        ASSERT_GE(sgn(w), 0);
    }
}

TEST(solve_phase_one, infeasible_exact) {
    // Two columns can never give row 0 more mass than row 1.
    auto a = matrix(2, {{0, 1}, {1}});
    std::vector<Rational> b{1, Rational(1, 2)};
    auto res = solve_phase_one<Rational>(a, b);
    ASSERT_FALSE(res.feasible);
    ASSERT_GT(sgn(res.infeasibility), 0);
    check_certificate(a, b, res);
}

TEST(solve_phase_one, feasible_double) {
    auto a = matrix(3, {{0, 2}, {1, 2}, {0, 1}});
    std::vector<double> b{1.0 / 3, 0.5, 5.0 / 6};
    auto res = solve_phase_one<double>(a, b);
    ASSERT_TRUE(res.feasible);
    auto got = reconstruct(a, res.weights);
    for (size_t r = 0; r < b.size(); r++) {
        ASSERT_NEAR(got[r], b[r], 1e-12);
    }
}

TEST(solve_phase_one, zero_rhs_and_empty_columns) {
    auto a = matrix(2, {{}, {0}});
    auto res = solve_phase_one<Rational>(a, {0, 0});
    ASSERT_TRUE(res.feasible);
    auto res2 = solve_phase_one<Rational>(a, {0, 1});
    ASSERT_FALSE(res2.feasible);
    check_certificate(a, std::vector<Rational>{0, 1}, res2);
}

TEST(solve_phase_one, bad_params) {
    auto a = matrix(2, {{0}});
    ASSERT_THROW(solve_phase_one<Rational>(a, {1}), Error);
    ASSERT_THROW(solve_phase_one<Rational>(a, {-1, 0}), Error);
    IncidenceMatrix m(2);
    std::vector<uint32_t> bad{2};
    ASSERT_THROW(m.add_column(bad), Error);
}

TEST(solve_phase_one, random_feasible_instances) {
    Rng rng(5);
    for (int trial = 0; trial < 100; trial++) {
        size_t m = 2 + rng.below(8);
        size_t n = 1 + rng.below(20);
        IncidenceMatrix a(m);
        for (size_t j = 0; j < n; j++) {
            std::vector<uint32_t> col;
            for (uint32_t r = 0; r < m; r++) {
                if (rng.below(2)) {
                    col.push_back(r);
                }
            }
            a.add_column(col);
        }
        std::vector<Rational> w(n);
        for (auto &v : w) {
            v = rng.below(3) == 0 ? Rational(0) : Rational(static_cast<long>(rng.below(7)), 7);
            v.canonicalize();
        }
        auto b = reconstruct(a, w);
        auto res = solve_phase_one<Rational>(a, b);
        ASSERT_TRUE(res.feasible);
        ASSERT_EQ(reconstruct(a, res.weights), b);
    }
}

TEST(solve_phase_one, random_instances_are_decided_soundly) {
    Rng rng(6);
    size_t infeasible = 0;
    for (int trial = 0; trial < 200; trial++) {
        size_t m = 2 + rng.below(6);
        size_t n = 1 + rng.below(8);
        IncidenceMatrix a(m);
        for (size_t j = 0; j < n; j++) {
            std::vector<uint32_t> col;
            for (uint32_t r = 0; r < m; r++) {
                if (rng.below(2)) {
                    col.push_back(r);
                }
            }
            a.add_column(col);
        }
        std::vector<Rational> b(m);
        std::vector<double> bd(m);
        for (size_t r = 0; r < m; r++) {
            b[r] = Rational(static_cast<long>(rng.below(5)), 4);
            b[r].canonicalize();
            bd[r] = b[r].get_d();
        }
        auto exact = solve_phase_one<Rational>(a, b);
        auto approx = solve_phase_one<double>(a, bd);
        ASSERT_EQ(exact.feasible, approx.feasible);
        if (exact.feasible) {
            ASSERT_EQ(reconstruct(a, exact.weights), b);
        } else {
            infeasible++;
            check_certificate(a, b, exact);
            check_certificate(a, bd, approx);
        }
    }
    ASSERT_GT(infeasible, 0u);
}
