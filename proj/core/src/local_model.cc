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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <type_traits>

#include "qsim/error.h"
#include "qsim/rng.h"

namespace qsim {

namespace {

std::vector<size_t> alphabet_sizes(const Alphabets &alphabets) {
    std::vector<size_t> out;
    for (const auto &a : alphabets) {
        out.push_back(a.size());
    }
    return out;
}

template <class Scalar>
bool is_zero_entry(const Scalar &v) {
    if constexpr (std::is_same_v<Scalar, double>) {
        return std::abs(v) <= 1e-12;
    } else {
        return sgn(v) == 0;
    }
}

BellInequality make_inequality(const CorrelationTable &target, const std::vector<Rational> &y) {
    const size_t entries = y.size() - 1;
    // Clear denominators, then divide out the common factor.
    mpz_class lcm = 1;
    for (const auto &v : y) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    }
    std::vector<mpz_class> scaled;
    mpz_class gcd = 0;
    for (const auto &v : y) {
        mpq_class w = v * lcm;
        scaled.push_back(w.get_num());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.back().get_mpz_t());
    }
    if (gcd != 0) {
        for (auto &v : scaled) {
            v /= gcd;
        }
    }
    BellInequality ineq;
    ineq.exact_coefficients.assign(scaled.begin(), scaled.begin() + static_cast<std::ptrdiff_t>(entries));
    ineq.exact_bound = -scaled[entries];
    for (const auto &c : ineq.exact_coefficients) {
        ineq.coefficients.push_back(c.get_d());
    }
    ineq.bound = ineq.exact_bound.get_d();
    ineq.violation = inequality_value(ineq, target) - ineq.bound;
    return ineq;
}

BellInequality make_inequality(const CorrelationTable &target, const std::vector<double> &y) {
    const size_t entries = y.size() - 1;
    double scale = 0;
    for (double v : y) {
        scale = std::max(scale, std::abs(v));
    }
    if (scale == 0) {
        scale = 1;
    }
    BellInequality ineq;
    for (size_t r = 0; r < entries; r++) {
        ineq.coefficients.push_back(y[r] / scale);
    }
    ineq.bound = -y[entries] / scale;
    ineq.violation = inequality_value(ineq, target) - ineq.bound;
    return ineq;
}

/// Columns hitting a zero entry of the target must carry zero weight, so
/// they and the zero rows are removed before solving. The dual of the
/// reduced problem extends to the full one by giving every zero row the
/// value -K, with K large enough to push each removed column below zero.
template <class Scalar>
LocalModelSearch solve(const CorrelationTable &target, const CommTopology &topology,
                       const std::vector<DeterministicStrategy> &strategies, std::vector<Scalar> b) {
    auto sizes = alphabet_sizes(target.alphabets());
    const size_t entries = b.size() - 1;
    std::vector<int64_t> reduced_row(entries + 1, -1);
    size_t reduced_rows = 0;
    for (size_t r = 0; r <= entries; r++) {
        if (r == entries || !is_zero_entry(b[r])) {
            reduced_row[r] = static_cast<int64_t>(reduced_rows++);
        }
    }
    std::vector<std::vector<uint32_t>> full_columns;
    full_columns.reserve(strategies.size());
    std::vector<size_t> kept;
    IncidenceMatrix matrix(reduced_rows);
    std::vector<uint32_t> rows;
    for (size_t j = 0; j < strategies.size(); j++) {
        auto outcomes = strategy_outcomes(strategies[j], topology, sizes);
        auto &full = full_columns.emplace_back();
        for (size_t k = 0; k < outcomes.size(); k++) {
            full.push_back(static_cast<uint32_t>(k * target.outcome_count() + outcomes[k]));
        }
        full.push_back(static_cast<uint32_t>(entries));
        rows.clear();
        for (uint32_t r : full) {
            if (reduced_row[r] < 0) {
                break;
            }
            rows.push_back(static_cast<uint32_t>(reduced_row[r]));
        }
        if (rows.size() == full.size()) {
            matrix.add_column(rows);
            kept.push_back(j);
        }
    }
    std::vector<Scalar> reduced_b;
    for (size_t r = 0; r <= entries; r++) {
        if (reduced_row[r] >= 0) {
            reduced_b.push_back(b[r]);
        }
    }
    auto lp = solve_phase_one<Scalar>(matrix, std::move(reduced_b));

    LocalModelSearch out;
    out.exact = !std::is_same_v<Scalar, double>;
    out.feasible = lp.feasible;
    out.strategies_considered = strategies.size();
    out.iterations = lp.iterations;
    if (lp.feasible) {
        LocalModel model{target.alphabets(), topology, {}, {}, {}};
        double total = 0;
        for (size_t c = 0; c < kept.size(); c++) {
            const Scalar &w = lp.weights[c];
            if constexpr (std::is_same_v<Scalar, double>) {
                if (w > 1e-12) {
                    model.strategies.push_back(strategies[kept[c]]);
                    model.weights.push_back(w);
                    total += w;
                }
            } else {
                if (sgn(w) > 0) {
                    model.strategies.push_back(strategies[kept[c]]);
                    model.exact_weights.push_back(w);
                    model.weights.push_back(w.get_d());
                }
            }
        }
        if constexpr (std::is_same_v<Scalar, double>) {
            for (auto &w : model.weights) {
                w /= total;
            }
        }
        out.model = std::move(model);
        return out;
    }
    std::vector<Scalar> y(entries + 1, Scalar(0));
    for (size_t r = 0; r <= entries; r++) {
        if (reduced_row[r] >= 0) {
            y[r] = lp.dual[static_cast<size_t>(reduced_row[r])];
        }
    }
    Scalar k = 0;
    for (const auto &full : full_columns) {
        Scalar positive_part = 0;
        bool removed = false;
        for (uint32_t r : full) {
            if (reduced_row[r] >= 0) {
                positive_part += y[r];
            } else {
                removed = true;
            }
        }
        if (removed && positive_part > k) {
            k = positive_part;
        }
    }
    for (size_t r = 0; r < entries; r++) {
        if (reduced_row[r] < 0) {
            y[r] = -k;
        }
    }
    out.certificate = make_inequality(target, y);
    return out;
}

}  // namespace

void validate_model(const LocalModel &model) {
    if (model.weights.size() != model.strategies.size()) {
        throw Error(ErrorCode::kBadParams, "model has " + std::to_string(model.weights.size()) + " weights for " +
                                               std::to_string(model.strategies.size()) + " strategies");
    }
    if (model.strategies.empty()) {
        throw Error(ErrorCode::kBadParams, "model has no strategies");
    }
    double total = 0;
    for (double w : model.weights) {
        if (!(w >= 0)) {
            throw Error(ErrorCode::kBadParams, "model weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1) > 1e-9) {
        throw Error(ErrorCode::kBadParams, "model weights sum to " + std::to_string(total));
    }
    model.topology.validate(model.alphabets.size());
    StrategyLayout layout(alphabet_sizes(model.alphabets), model.topology);
    for (const auto &s : model.strategies) {
        layout.encode(s);
    }
}

std::optional<std::vector<Rational>> dyadic_probabilities(const CorrelationTable &table) {
    std::vector<Rational> out;
    out.reserve(table.probabilities().size());
    for (double p : table.probabilities()) {
        bool found = false;
        for (int k = 0; k <= 20 && !found; k++) {
            double scaled = std::ldexp(p, k);
            double rounded = std::round(scaled);
            if (std::abs(std::ldexp(rounded, -k) - p) <= 1e-12) {
                Rational q(mpz_class(static_cast<long>(rounded)), mpz_class(1) << static_cast<unsigned>(k));
                q.canonicalize();
                if (sgn(q) < 0) {
                    return std::nullopt;
                }
                out.push_back(q);
                found = true;
            }
        }
        if (!found) {
            return std::nullopt;
        }
    }
    const size_t o = table.outcome_count();
    for (size_t k = 0; k < table.profile_count(); k++) {
        Rational total = 0;
        for (size_t j = 0; j < o; j++) {
            total += out[k * o + j];
        }
        if (total != 1) {
            return std::nullopt;
        }
    }
    return out;
}

LocalModelSearch find_local_model(const CorrelationTable &target, const CommTopology &topology,
                                  const SearchOptions &options) {
    topology.validate(target.parties());
    if (target.max_normalization_error() > 1e-10) {
        throw Error(ErrorCode::kBadParams, "target distributions do not sum to 1");
    }
    std::optional<std::vector<Rational>> exact;
    if (options.arithmetic != Arithmetic::kFloating) {
        exact = dyadic_probabilities(target);
        if (!exact.has_value() && options.arithmetic == Arithmetic::kExact) {
            throw Error(ErrorCode::kBadParams, "target is not a table of dyadic rationals");
        }
    }
    auto sizes = alphabet_sizes(target.alphabets());
    auto strategies = enumerate_strategies(sizes.size(), sizes, topology, options.enumeration);
    if (exact.has_value()) {
        exact->push_back(Rational(1));
        return solve<Rational>(target, topology, strategies, std::move(*exact));
    }
    std::vector<double> b = target.probabilities();
    b.push_back(1.0);
    return solve<double>(target, topology, strategies, std::move(b));
}

LocalModel singlet_pauli_lhv() {
    LocalModel model;
    model.alphabets = pauli_alphabets(2);
    for (int lambda = 0; lambda < 8; lambda++) {
        DeterministicStrategy s;
        s.parties.resize(2);
        for (int axis = 0; axis < 3; axis++) {
            int8_t v = ((lambda >> (2 - axis)) & 1) ? -1 : 1;
            s.parties[0].outputs.push_back(v);
            s.parties[1].outputs.push_back(static_cast<int8_t>(-v));
        }
        model.strategies.push_back(std::move(s));
        model.weights.push_back(0.125);
        model.exact_weights.push_back(Rational(1, 8));
    }
    return model;
}

CorrelationTable model_table(const LocalModel &model) {
    validate_model(model);
    auto sizes = alphabet_sizes(model.alphabets);
    CorrelationTable table(model.alphabets);
    for (size_t j = 0; j < model.strategies.size(); j++) {
        auto outcomes = strategy_outcomes(model.strategies[j], model.topology, sizes);
        for (size_t k = 0; k < outcomes.size(); k++) {
            table.distribution(k)[outcomes[k]] += model.weights[j];
        }
    }
    return table;
}

double inequality_value(const BellInequality &inequality, const CorrelationTable &table) {
    const auto &p = table.probabilities();
    if (p.size() != inequality.coefficients.size()) {
        throw Error(ErrorCode::kBadParams, "inequality and table differ in size");
    }
    double total = 0;
    for (size_t r = 0; r < p.size(); r++) {
        total += inequality.coefficients[r] * p[r];
    }
    return total;
}

SimulationResult simulate_model(const LocalModel &model, uint64_t shots, uint64_t seed) {
    validate_model(model);
    std::vector<double> cumulative(model.weights.size());
    std::partial_sum(model.weights.begin(), model.weights.end(), cumulative.begin());
    CorrelationTable table(model.alphabets);
    std::vector<uint64_t> profile_shots(table.profile_count(), 0);
    std::vector<std::vector<uint64_t>> counts(table.profile_count(), std::vector<uint64_t>(table.outcome_count(), 0));
    size_t bits = model.topology.budget();
    for (uint64_t s = 0; s < shots; s++) {
        Rng rng = Rng::for_stream(seed, s);
        double u = rng.uniform() * cumulative.back();
        size_t j = static_cast<size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
        j = std::min(j, cumulative.size() - 1);
        size_t profile = static_cast<size_t>(rng.below(table.profile_count()));
        auto settings = table.setting_indices(profile);
        auto result = evaluate(model.strategies[j], model.topology, settings);
        if (s == 0) {
            bits = result.bits_sent;
        } else if (result.bits_sent != bits) {
            throw Error(ErrorCode::kBadParams, "strategies disagree on the number of bits sent");
        }
        counts[profile][result.outcome]++;
        profile_shots[profile]++;
    }
    for (size_t k = 0; k < table.profile_count(); k++) {
        if (profile_shots[k] == 0) {
            continue;
        }
        auto dist = table.distribution(k);
        for (size_t o = 0; o < dist.size(); o++) {
            dist[o] = static_cast<double>(counts[k][o]) / static_cast<double>(profile_shots[k]);
        }
    }
    return {std::move(table), bits, std::move(profile_shots)};
}

}  // namespace qsim
