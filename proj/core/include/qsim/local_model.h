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

#ifndef QSIM_LOCAL_MODEL_H
#define QSIM_LOCAL_MODEL_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qsim/correlation_table.h"
#include "qsim/simplex.h"
#include "qsim/strategy.h"

namespace qsim {

/// Mixture of deterministic strategies sharing one topology. Party p uses
/// alphabets[p]; strategies index settings by position in that alphabet.
struct LocalModel {
    Alphabets alphabets;
    CommTopology topology;
    std::vector<DeterministicStrategy> strategies;
    std::vector<double> weights;
    /// Same weights as exact rationals, when the model was found exactly.
    std::vector<Rational> exact_weights;
};

/// Throws BadParams unless weights are nonnegative, match the strategy count
/// and sum to 1 within 1e-9.
void validate_model(const LocalModel &model);

/// Bell-type inequality sum_r coefficients[r] * T[r] <= bound over table
/// entries T (profile-major, as in CorrelationTable::probabilities).
struct BellInequality {
    std::vector<double> coefficients;
    double bound = 0;
    /// Integer coefficients and bound, when the search ran exactly.
    std::vector<mpz_class> exact_coefficients;
    mpz_class exact_bound;
    /// sum coefficients * target - bound.
    double violation = 0;
};

enum class Arithmetic { kAuto, kExact, kFloating };

struct SearchOptions {
    EnumerationOptions enumeration;
    Arithmetic arithmetic = Arithmetic::kAuto;
};

struct LocalModelSearch {
    bool feasible = false;
    bool exact = false;
    std::optional<LocalModel> model;
    std::optional<BellInequality> certificate;
    size_t strategies_considered = 0;
    size_t iterations = 0;
};

/// Decides whether `target` is a mixture of deterministic strategies over
/// `topology`. Feasible searches return the support of the found mixture;
/// infeasible ones return a separating inequality.
LocalModelSearch find_local_model(const CorrelationTable &target, const CommTopology &topology,
                                  const SearchOptions &options = {});

/// Exact dyadic rationals within 1e-12 of every entry, with every profile
/// summing to exactly 1; nullopt otherwise.
std::optional<std::vector<Rational>> dyadic_probabilities(const CorrelationTable &table);

/// Bell's model for the singlet with Pauli settings: eight equally weighted
/// hidden values lambda in {+1,-1}^3, A outputs lambda_s and B outputs
/// -lambda_s.
LocalModel singlet_pauli_lhv();

/// Exact induced table of the mixture.
CorrelationTable model_table(const LocalModel &model);

/// sum_r c_r T_r for a strategy's point table.
double inequality_value(const BellInequality &inequality, const CorrelationTable &table);

struct SimulationResult {
    CorrelationTable empirical;
    size_t bits_used_per_shot = 0;
    std::vector<uint64_t> profile_shots;
};

/// Each shot draws a strategy by weight and a uniform profile from its own
/// RNG stream, then runs the strategy counting transmitted bits.
SimulationResult simulate_model(const LocalModel &model, uint64_t shots, uint64_t seed);

}  // namespace qsim

#endif
