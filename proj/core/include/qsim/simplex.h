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

#ifndef QSIM_SIMPLEX_H
#define QSIM_SIMPLEX_H

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qsim/error.h"

namespace qsim {

using Rational = mpq_class;

/// Sparse 0/1 matrix stored column by column.
class IncidenceMatrix {
   public:
    explicit IncidenceMatrix(size_t rows) : rows_(rows), start_{0} {
    }

    void add_column(std::span<const uint32_t> rows) {
        for (uint32_t r : rows) {
            if (r >= rows_) {
                throw Error(ErrorCode::kIndexOutOfRange, "incidence row out of range");
            }
            entries_.push_back(r);
        }
        start_.push_back(static_cast<uint32_t>(entries_.size()));
    }

    size_t rows() const {
        return rows_;
    }
    size_t columns() const {
        return start_.size() - 1;
    }
    std::span<const uint32_t> column(size_t j) const {
        return {entries_.data() + start_[j], entries_.data() + start_[j + 1]};
    }

   private:
    size_t rows_;
    std::vector<uint32_t> start_;
    std::vector<uint32_t> entries_;
};

inline int sgn_of(double x) {
    return (x > 0) - (x < 0);
}
inline int sgn_of(const Rational &x) {
    return sgn(x);
}

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr double kTolerance = 1e-9;
    static bool positive(double x) {
        return x > kTolerance;
    }
    static bool is_zero(double x) {
        return std::abs(x) <= kTolerance;
    }
    static double to_double(double x) {
        return x;
    }
};

template <>
struct ScalarTraits<Rational> {
    static bool positive(const Rational &x) {
        return sgn(x) > 0;
    }
    static bool is_zero(const Rational &x) {
        return sgn(x) == 0;
    }
    static double to_double(const Rational &x) {
        return x.get_d();
    }
};

template <class Scalar>
struct FeasibilityResult {
    bool feasible = false;
    /// One weight per column; meaningful when feasible.
    std::vector<Scalar> weights;
    /// Phase-one duals. When infeasible, dual . A_j <= 0 for every column and
    /// dual . b = infeasibility > 0.
    std::vector<Scalar> dual;
    Scalar infeasibility;
    size_t iterations = 0;
};

/// Decides whether A w = b has a solution with w >= 0 by the phase-one
/// revised simplex method with one artificial variable per row. Requires
/// b >= 0. Pricing uses Dantzig's rule, switching to Bland's rule while the
/// objective stalls.
template <class Scalar>
FeasibilityResult<Scalar> solve_phase_one(const IncidenceMatrix &a, std::vector<Scalar> b,
                                          size_t max_iterations = 1'000'000) {
    using T = ScalarTraits<Scalar>;
    const size_t m = a.rows();
    const size_t n = a.columns();
    if (b.size() != m) {
        throw Error(ErrorCode::kBadParams, "right-hand side has the wrong length");
    }
    for (auto &v : b) {
        if (sgn_of(v) < 0) {
            if (!T::is_zero(v)) {
                throw Error(ErrorCode::kBadParams, "right-hand side must be nonnegative");
            }
            v = 0;
        }
    }

    std::vector<size_t> basis(m);
    std::vector<std::vector<Scalar>> binv(m, std::vector<Scalar>(m, Scalar(0)));
    std::vector<Scalar> xb = b;
    for (size_t i = 0; i < m; i++) {
        basis[i] = n + i;
        binv[i][i] = 1;
    }

    FeasibilityResult<Scalar> result;
    std::vector<Scalar> y(m);
    std::vector<double> y_dbl(m);
    std::vector<Scalar> u(m);
    std::vector<size_t> pivot_row_nz;
    Scalar objective;
    Scalar previous_objective;
    size_t stall = 0;
    bool first = true;

    auto exact_score = [&](size_t j) {
        Scalar s = 0;
        for (uint32_t r : a.column(j)) {
            s += y[r];
        }
        return s;
    };

    while (true) {
        objective = 0;
        for (size_t r = 0; r < m; r++) {
            y[r] = 0;
        }
        for (size_t i = 0; i < m; i++) {
            if (basis[i] >= n) {
                objective += xb[i];
                for (size_t r = 0; r < m; r++) {
                    if (!T::is_zero(binv[i][r])) {
                        y[r] += binv[i][r];
                    }
                }
            }
        }
        if (T::is_zero(objective)) {
            result.feasible = true;
            break;
        }
        if (!first && !(objective < previous_objective)) {
            stall++;
        } else {
            stall = 0;
        }
        first = false;
        previous_objective = objective;
        if (result.iterations >= max_iterations) {
            throw Error(ErrorCode::kBadParams, "simplex iteration limit reached");
        }

        double y_scale = 1;
        for (size_t r = 0; r < m; r++) {
            y_dbl[r] = T::to_double(y[r]);
            y_scale += std::abs(y_dbl[r]);
        }
        const double filter = -1e-9 * y_scale;
        const bool bland = stall > 50;

        size_t entering = n;
        if (!bland) {
            double best = 0;
            size_t best_j = n;
            for (size_t j = 0; j < n; j++) {
                double s = 0;
                for (uint32_t r : a.column(j)) {
                    s += y_dbl[r];
                }
                if (s > best) {
                    best = s;
                    best_j = j;
                }
            }
            if (best_j < n && T::positive(exact_score(best_j))) {
                entering = best_j;
            }
        }
        if (entering == n) {
            for (size_t j = 0; j < n && entering == n; j++) {
                double s = 0;
                for (uint32_t r : a.column(j)) {
                    s += y_dbl[r];
                }
                if (s >= filter && T::positive(exact_score(j))) {
                    entering = j;
                }
            }
        }
        if (entering == n) {
            // Exhaustive check without the floating filter before concluding.
            for (size_t j = 0; j < n && entering == n; j++) {
                if (T::positive(exact_score(j))) {
                    entering = j;
                }
            }
        }
        if (entering == n) {
            break;
        }

        for (size_t i = 0; i < m; i++) {
            u[i] = 0;
            for (uint32_t r : a.column(entering)) {
                u[i] += binv[i][r];
            }
        }
        size_t leave = m;
        Scalar best_ratio = 0;
        for (size_t i = 0; i < m; i++) {
            if (!T::positive(u[i])) {
                continue;
            }
            Scalar ratio = xb[i] / u[i];
            bool take = leave == m;
            if (!take) {
                Scalar diff = ratio - best_ratio;
                if (T::is_zero(diff)) {
                    bool art_i = basis[i] >= n;
                    bool art_l = basis[leave] >= n;
                    if (bland || art_i == art_l) {
                        take = basis[i] < basis[leave];
                    } else {
                        take = art_i;
                    }
                } else {
                    take = sgn_of(diff) < 0;
                }
            }
            if (take) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) {
            throw Error(ErrorCode::kBadParams, "phase-one problem is unbounded");
        }

        Scalar pivot = u[leave];
        Scalar theta = xb[leave] / pivot;
        for (size_t i = 0; i < m; i++) {
            if (i != leave && !T::is_zero(u[i])) {
                xb[i] -= theta * u[i];
                if (sgn_of(xb[i]) < 0 && T::is_zero(xb[i])) {
                    xb[i] = 0;
                }
            }
        }
        xb[leave] = theta;
        pivot_row_nz.clear();
        for (size_t r = 0; r < m; r++) {
            if (!T::is_zero(binv[leave][r])) {
                binv[leave][r] /= pivot;
                pivot_row_nz.push_back(r);
            } else {
                binv[leave][r] = 0;
            }
        }
        for (size_t i = 0; i < m; i++) {
            if (i == leave || T::is_zero(u[i])) {
                continue;
            }
            for (size_t r : pivot_row_nz) {
                binv[i][r] -= u[i] * binv[leave][r];
            }
        }
        basis[leave] = entering;
        result.iterations++;
    }

    result.infeasibility = objective;
    result.dual = y;
    result.weights.assign(n, Scalar(0));
    for (size_t i = 0; i < m; i++) {
        if (basis[i] < n) {
            result.weights[basis[i]] = xb[i];
        }
    }
    return result;
}

}  // namespace qsim

#endif
