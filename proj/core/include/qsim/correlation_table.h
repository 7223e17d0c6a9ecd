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

#ifndef QSIM_CORRELATION_TABLE_H
#define QSIM_CORRELATION_TABLE_H

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qsim/state_vector.h"

namespace qsim {

using Setting = MeasurementAxis;
using SettingProfile = std::vector<Setting>;
using Alphabets = std::vector<std::vector<Setting>>;

/// The {X, Y, Z} alphabet for each of `parties` parties.
Alphabets pauli_alphabets(size_t parties);

/// Joint outcome distributions indexed by setting profile.
///
/// Profiles are numbered mixed-radix with party 0 most significant. Outcome
/// tuples are numbered big-endian with party 0 most significant, bit value 1
/// meaning outcome -1. Probabilities are stored profile-major.
class CorrelationTable {
   public:
    explicit CorrelationTable(Alphabets alphabets);
    CorrelationTable(Alphabets alphabets, std::vector<double> probabilities);

    size_t parties() const {
        return alphabets_.size();
    }
    const Alphabets &alphabets() const {
        return alphabets_;
    }
    size_t profile_count() const {
        return profile_count_;
    }
    size_t outcome_count() const {
        return size_t{1} << alphabets_.size();
    }

    std::vector<size_t> setting_indices(size_t profile) const;
    size_t profile_index(std::span<const size_t> setting_indices) const;
    SettingProfile profile(size_t profile) const;
    std::optional<size_t> find_profile(const SettingProfile &profile) const;

    std::span<const double> distribution(size_t profile) const {
        return {probs_.data() + profile * outcome_count(), outcome_count()};
    }
    std::span<double> distribution(size_t profile) {
        return {probs_.data() + profile * outcome_count(), outcome_count()};
    }
    double probability(size_t profile, size_t outcome) const {
        return probs_[profile * outcome_count() + outcome];
    }
    const std::vector<double> &probabilities() const {
        return probs_;
    }

    /// Largest |sum - 1| over all profile distributions.
    double max_normalization_error() const;

   private:
    Alphabets alphabets_;
    size_t profile_count_;
    std::vector<double> probs_;
};

/// Party p measures qubit p of `state`; every profile's distribution is
/// computed exactly with joint_probabilities.
CorrelationTable quantum_table(const PureState &state, const Alphabets &alphabets);

/// +1 or -1: product of the outcomes encoded in `outcome`.
int outcome_parity(size_t outcome);

double correlator_at(const CorrelationTable &table, size_t profile);

/// Expectation of the product of outcomes; throws UnknownProfile.
double correlator(const CorrelationTable &table, const SettingProfile &profile);

/// S = E(a,b) + E(a,b') + E(a',b) - E(a',b').
double chsh_value(const CorrelationTable &table, const Setting &a, const Setting &a2, const Setting &b,
                  const Setting &b2);

/// (<XXX>, <XYY>, <YXY>, <YYX>).
std::array<double, 4> mermin_correlators(const CorrelationTable &table);

/// Largest change in any single party's marginal when the other parties'
/// settings vary; 0 for non-signalling tables.
double max_signalling_deviation(const CorrelationTable &table);

/// Half the L1 distance.
double total_variation_distance(std::span<const double> p, std::span<const double> q);

}  // namespace qsim

#endif
