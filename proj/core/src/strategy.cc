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

#include "qsim/strategy.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "qsim/error.h"

namespace qsim {

namespace {

size_t parse_party(std::string_view text, std::string_view whole) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty() || text.size() > 6 ||
        !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw Error(ErrorCode::kBadParams, "bad topology '" + std::string(whole) + "'");
    }
    size_t party = std::stoul(std::string(text));
    if (party == 0) {
        throw Error(ErrorCode::kBadParams, "parties are numbered from 1 in topology '" + std::string(whole) + "'");
    }
    return party - 1;
}

}  // namespace

CommTopology::CommTopology(std::vector<Message> messages) : messages_(std::move(messages)) {
    for (const auto &m : messages_) {
        if (m.sender == m.receiver) {
            throw Error(ErrorCode::kBadParams, "a party cannot message itself");
        }
    }
}

CommTopology CommTopology::parse(std::string_view text) {
    std::vector<Message> messages;
    std::string_view rest = text;
    bool blank = std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (blank) {
        return CommTopology();
    }
    while (true) {
        size_t comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        size_t arrow = item.find('>');
        if (arrow == std::string_view::npos) {
            throw Error(ErrorCode::kBadParams, "bad topology '" + std::string(text) + "'");
        }
        messages.push_back({parse_party(item.substr(0, arrow), text), parse_party(item.substr(arrow + 1), text)});
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    return CommTopology(std::move(messages));
}

std::string CommTopology::str() const {
    std::string out;
    for (const auto &m : messages_) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(m.sender + 1) + ">" + std::to_string(m.receiver + 1);
    }
    return out;
}

void CommTopology::validate(size_t parties) const {
    for (const auto &m : messages_) {
        if (m.sender >= parties || m.receiver >= parties) {
            throw Error(ErrorCode::kBadParams,
                        "topology '" + str() + "' names a party beyond " + std::to_string(parties));
        }
    }
}

StrategyLayout::StrategyLayout(std::vector<size_t> alphabet_sizes, CommTopology topology)
    : alphabet_sizes_(std::move(alphabet_sizes)),
      topology_(std::move(topology)),
      received_(alphabet_sizes_.size(), 0),
      message_entries_(alphabet_sizes_.size()) {
    topology_.validate(parties());
    for (size_t s : alphabet_sizes_) {
        if (s == 0) {
            throw Error(ErrorCode::kBadParams, "every party needs at least one setting");
        }
    }
    for (const auto &m : topology_.messages()) {
        message_entries_[m.sender].push_back(alphabet_sizes_[m.sender] << received_[m.sender]);
        received_[m.receiver]++;
    }
    for (size_t p = 0; p < parties(); p++) {
        total_bits_ += party_bits(p);
    }
}

size_t StrategyLayout::output_entries(size_t party) const {
    return alphabet_sizes_[party] << received_[party];
}

size_t StrategyLayout::party_bits(size_t party) const {
    size_t bits = output_entries(party);
    for (size_t e : message_entries_[party]) {
        bits += e;
    }
    return bits;
}

uint64_t StrategyLayout::count() const {
    if (total_bits_ > 62) {
        throw Error(ErrorCode::kTooManyStrategies,
                    "strategy space has 2^" + std::to_string(total_bits_) + " elements");
    }
    return uint64_t{1} << total_bits_;
}

DeterministicStrategy StrategyLayout::decode(uint64_t index) const {
    count();
    size_t pos = total_bits_;
    auto next_bit = [&]() -> unsigned {
        pos--;
        return static_cast<unsigned>((index >> pos) & 1);
    };
    DeterministicStrategy out;
    out.parties.resize(parties());
    for (size_t p = 0; p < parties(); p++) {
        auto &party = out.parties[p];
        party.outputs.resize(output_entries(p));
        for (auto &v : party.outputs) {
            v = next_bit() ? -1 : 1;
        }
        for (size_t e : message_entries_[p]) {
            auto &table = party.messages.emplace_back(e);
            for (auto &v : table) {
                v = static_cast<uint8_t>(next_bit());
            }
        }
    }
    return out;
}

uint64_t StrategyLayout::encode(const DeterministicStrategy &strategy) const {
    if (strategy.parties.size() != parties()) {
        throw Error(ErrorCode::kBadParams, "strategy has the wrong number of parties");
    }
    count();
    uint64_t index = 0;
    for (size_t p = 0; p < parties(); p++) {
        const auto &party = strategy.parties[p];
        if (party.outputs.size() != output_entries(p) || party.messages.size() != message_entries_[p].size()) {
            throw Error(ErrorCode::kBadParams, "strategy tables do not match the layout");
        }
        for (auto v : party.outputs) {
            index = (index << 1) | (v < 0 ? 1 : 0);
        }
        for (size_t j = 0; j < party.messages.size(); j++) {
            if (party.messages[j].size() != message_entries_[p][j]) {
                throw Error(ErrorCode::kBadParams, "strategy tables do not match the layout");
            }
            for (auto v : party.messages[j]) {
                index = (index << 1) | (v & 1);
            }
        }
    }
    return index;
}

StrategyOutcome evaluate(const DeterministicStrategy &strategy, const CommTopology &topology,
                         std::span<const size_t> settings) {
    const size_t n = strategy.parties.size();
    std::vector<size_t> received(n, 0);
    std::vector<size_t> received_count(n, 0);
    std::vector<size_t> sent_count(n, 0);
    for (const auto &m : topology.messages()) {
        const auto &table = strategy.parties[m.sender].messages[sent_count[m.sender]++];
        size_t r = received_count[m.sender];
        uint8_t bit = table[(settings[m.sender] << r) + received[m.sender]];
        received[m.receiver] |= size_t{bit} << received_count[m.receiver];
        received_count[m.receiver]++;
    }
    size_t outcome = 0;
    for (size_t p = 0; p < n; p++) {
        int8_t v = strategy.parties[p].outputs[(settings[p] << received_count[p]) + received[p]];
        outcome = (outcome << 1) | (v < 0 ? 1 : 0);
    }
    return {outcome, topology.budget()};
}

std::vector<size_t> strategy_outcomes(const DeterministicStrategy &strategy, const CommTopology &topology,
                                      std::span<const size_t> alphabet_sizes) {
    const size_t n = alphabet_sizes.size();
    size_t profiles = 1;
    for (size_t s : alphabet_sizes) {
        profiles *= s;
    }
    std::vector<size_t> settings(n, 0);
    std::vector<size_t> out;
    out.reserve(profiles);
    for (size_t k = 0; k < profiles; k++) {
        out.push_back(evaluate(strategy, topology, settings).outcome);
        for (size_t p = n; p-- > 0;) {
            if (++settings[p] < alphabet_sizes[p]) {
                break;
            }
            settings[p] = 0;
        }
    }
    return out;
}

std::vector<DeterministicStrategy> enumerate_strategies(size_t parties, std::span<const size_t> alphabet_sizes,
                                                        const CommTopology &topology,
                                                        const EnumerationOptions &options) {
    if (alphabet_sizes.size() != parties) {
        throw Error(ErrorCode::kBadParams, "need one alphabet size per party");
    }
    StrategyLayout layout(std::vector<size_t>(alphabet_sizes.begin(), alphabet_sizes.end()), topology);
    uint64_t count = layout.count();
    if (count > options.max_strategies) {
        throw Error(ErrorCode::kTooManyStrategies, std::to_string(count) + " strategies exceed the limit of " +
                                                       std::to_string(options.max_strategies));
    }
    std::vector<DeterministicStrategy> out;
    out.reserve(options.deduplicate ? 0 : count);
    std::set<std::vector<size_t>> seen;
    for (uint64_t k = 0; k < count; k++) {
        auto strategy = layout.decode(k);
        if (options.deduplicate && !seen.insert(strategy_outcomes(strategy, topology, alphabet_sizes)).second) {
            continue;
        }
        out.push_back(std::move(strategy));
    }
    return out;
}

CorrelationTable strategy_table(const DeterministicStrategy &strategy, const CommTopology &topology,
                                const Alphabets &alphabets) {
    std::vector<size_t> sizes;
    for (const auto &a : alphabets) {
        sizes.push_back(a.size());
    }
    CorrelationTable table(alphabets);
    auto outcomes = strategy_outcomes(strategy, topology, sizes);
    for (size_t k = 0; k < outcomes.size(); k++) {
        table.distribution(k)[outcomes[k]] = 1.0;
    }
    return table;
}

}  // namespace qsim
