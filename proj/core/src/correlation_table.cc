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

#include "qsim/correlation_table.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace qsim {

Alphabets pauli_alphabets(size_t parties) {
    std::vector<Setting> paulis{PauliAxis::kX, PauliAxis::kY, PauliAxis::kZ};
    return Alphabets(parties, paulis);
}

CorrelationTable::CorrelationTable(Alphabets alphabets) : alphabets_(std::move(alphabets)), profile_count_(1) {
    if (alphabets_.size() < 2) {
        throw Error(ErrorCode::kBadParams, "a correlation table needs at least two parties");
    }
    if (alphabets_.size() > 16) {
        throw Error(ErrorCode::kBadParams, "a correlation table supports at most 16 parties");
    }
    for (const auto &alphabet : alphabets_) {
        if (alphabet.empty()) {
            throw Error(ErrorCode::kBadParams, "every party needs at least one setting");
        }
        profile_count_ *= alphabet.size();
    }
    probs_.assign(profile_count_ * outcome_count(), 0.0);
}

CorrelationTable::CorrelationTable(Alphabets alphabets, std::vector<double> probabilities)
    : CorrelationTable(std::move(alphabets)) {
    if (probabilities.size() != probs_.size()) {
        throw Error(ErrorCode::kBadParams, "expected " + std::to_string(probs_.size()) + " probabilities, got " +
                                               std::to_string(probabilities.size()));
    }
    probs_ = std::move(probabilities);
}

std::vector<size_t> CorrelationTable::setting_indices(size_t profile) const {
    std::vector<size_t> out(parties());
    for (size_t p = parties(); p-- > 0;) {
        out[p] = profile % alphabets_[p].size();
        profile /= alphabets_[p].size();
    }
    return out;
}

size_t CorrelationTable::profile_index(std::span<const size_t> setting_indices) const {
    if (setting_indices.size() != parties()) {
        throw Error(ErrorCode::kUnknownProfile, "profile has the wrong number of settings");
    }
    size_t index = 0;
    for (size_t p = 0; p < parties(); p++) {
        if (setting_indices[p] >= alphabets_[p].size()) {
            throw Error(ErrorCode::kUnknownProfile, "setting index out of range for party " + std::to_string(p + 1));
        }
        index = index * alphabets_[p].size() + setting_indices[p];
    }
    return index;
}

SettingProfile CorrelationTable::profile(size_t profile) const {
    auto idx = setting_indices(profile);
    SettingProfile out;
    for (size_t p = 0; p < parties(); p++) {
        out.push_back(alphabets_[p][idx[p]]);
    }
    return out;
}

std::optional<size_t> CorrelationTable::find_profile(const SettingProfile &profile) const {
    if (profile.size() != parties()) {
        return std::nullopt;
    }
    std::vector<size_t> idx;
    for (size_t p = 0; p < parties(); p++) {
        auto it = std::find(alphabets_[p].begin(), alphabets_[p].end(), profile[p]);
        if (it == alphabets_[p].end()) {
            return std::nullopt;
        }
        idx.push_back(static_cast<size_t>(it - alphabets_[p].begin()));
    }
    return profile_index(idx);
}

double CorrelationTable::max_normalization_error() const {
    double worst = 0;
    for (size_t k = 0; k < profile_count_; k++) {
        double total = 0;
        for (double v : distribution(k)) {
            total += v;
        }
        worst = std::max(worst, std::abs(total - 1));
    }
    return worst;
}

CorrelationTable quantum_table(const PureState &state, const Alphabets &alphabets) {
    if (alphabets.size() != state.num_qubits()) {
        throw Error(ErrorCode::kBadParams, "need one alphabet per qubit");
    }
    CorrelationTable table(alphabets);
    std::vector<MeasurementSpec> specs(alphabets.size(), MeasurementSpec{0, PauliAxis::kZ});
    for (size_t k = 0; k < table.profile_count(); k++) {
        auto settings = table.profile(k);
        for (size_t p = 0; p < settings.size(); p++) {
            specs[p] = MeasurementSpec{p, settings[p]};
        }
        auto dist = joint_probabilities(state, specs);
        std::copy(dist.begin(), dist.end(), table.distribution(k).begin());
    }
    return table;
}

int outcome_parity(size_t outcome) {
    return (std::popcount(outcome) & 1) ? -1 : 1;
}

double correlator_at(const CorrelationTable &table, size_t profile) {
    double e = 0;
    auto dist = table.distribution(profile);
    for (size_t o = 0; o < dist.size(); o++) {
        e += outcome_parity(o) * dist[o];
    }
    return e;
}

double correlator(const CorrelationTable &table, const SettingProfile &profile) {
    auto index = table.find_profile(profile);
    if (!index.has_value()) {
        std::string label;
        for (const auto &s : profile) {
            label += axis_label(s) + " ";
        }
        throw Error(ErrorCode::kUnknownProfile, "profile " + label + "is not in the table");
    }
    return correlator_at(table, *index);
}

double chsh_value(const CorrelationTable &table, const Setting &a, const Setting &a2, const Setting &b,
                  const Setting &b2) {
    if (table.parties() != 2) {
        throw Error(ErrorCode::kBadParams, "CHSH needs a two-party table");
    }
    return correlator(table, {a, b}) + correlator(table, {a, b2}) + correlator(table, {a2, b}) -
           correlator(table, {a2, b2});
}

std::array<double, 4> mermin_correlators(const CorrelationTable &table) {
    if (table.parties() != 3) {
        throw Error(ErrorCode::kBadParams, "Mermin correlators need a three-party table");
    }
    const Setting X = PauliAxis::kX;
    const Setting Y = PauliAxis::kY;
    return {correlator(table, {X, X, X}), correlator(table, {X, Y, Y}), correlator(table, {Y, X, Y}),
            correlator(table, {Y, Y, X})};
}

double max_signalling_deviation(const CorrelationTable &table) {
    const size_t n = table.parties();
    double worst = 0;
    for (size_t p = 0; p < n; p++) {
        const size_t shift = n - 1 - p;
        // First marginal seen for each of party p's settings.
        std::vector<std::optional<double>> reference(table.alphabets()[p].size());
        for (size_t k = 0; k < table.profile_count(); k++) {
            size_t setting = table.setting_indices(k)[p];
            double plus = 0;
            auto dist = table.distribution(k);
            for (size_t o = 0; o < dist.size(); o++) {
                if (((o >> shift) & 1) == 0) {
                    plus += dist[o];
                }
            }
            if (!reference[setting].has_value()) {
                reference[setting] = plus;
            } else {
                worst = std::max(worst, std::abs(plus - *reference[setting]));
            }
        }
    }
    return worst;
}

double total_variation_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw Error(ErrorCode::kBadParams, "distributions differ in size");
    }
    double total = 0;
    for (size_t k = 0; k < p.size(); k++) {
        total += std::abs(p[k] - q[k]);
    }
    return total / 2;
}

}  // namespace qsim
