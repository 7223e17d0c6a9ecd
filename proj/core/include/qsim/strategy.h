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

#ifndef QSIM_STRATEGY_H
#define QSIM_STRATEGY_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsim/correlation_table.h"

namespace qsim {

/// One bit sent from `sender` to `receiver` (0-based party indices).
struct Message {
    size_t sender;
    size_t receiver;

    bool operator==(const Message &) const = default;
};

/// Ordered sequence of one-bit messages. Messages are executed in order, so
/// a party may forward bits it received from earlier messages.
class CommTopology {
   public:
    CommTopology() = default;
    explicit CommTopology(std::vector<Message> messages);

    /// Parses "2>1,3>2" (1-based parties). The empty string means no messages.
    static CommTopology parse(std::string_view text);
    std::string str() const;

    const std::vector<Message> &messages() const {
        return messages_;
    }
    size_t budget() const {
        return messages_.size();
    }

    /// Throws BadParams unless every message names two distinct parties below
    /// `parties`.
    void validate(size_t parties) const;

    bool operator==(const CommTopology &) const = default;

   private:
    std::vector<Message> messages_;
};

/// Tables for one party. `outputs` is indexed by setting * 2^r + received,
/// where r is the number of messages the party receives and the k-th received
/// bit sits at bit k of `received`. `messages[j]` belongs to the j-th message
/// the party sends and is indexed by setting * 2^m + received bits so far,
/// m being the number of bits received before that message.
struct PartyStrategy {
    std::vector<int8_t> outputs;
    std::vector<std::vector<uint8_t>> messages;

    bool operator==(const PartyStrategy &) const = default;
};

struct DeterministicStrategy {
    std::vector<PartyStrategy> parties;

    bool operator==(const DeterministicStrategy &) const = default;
};

/// Sizes of every table in a strategy and the bijection between strategies
/// and integer indices.
///
/// A strategy is a bit string: party 0's bits first, and within a party the
/// output table entries followed by each message table in send order. Index
/// order is lexicographic with the first bit most significant. Output bit 0
/// means +1.
class StrategyLayout {
   public:
    StrategyLayout(std::vector<size_t> alphabet_sizes, CommTopology topology);

    size_t parties() const {
        return alphabet_sizes_.size();
    }
    const std::vector<size_t> &alphabet_sizes() const {
        return alphabet_sizes_;
    }
    const CommTopology &topology() const {
        return topology_;
    }
    size_t output_entries(size_t party) const;
    /// Entry counts of the messages sent by `party`, in send order.
    const std::vector<size_t> &message_entries(size_t party) const {
        return message_entries_[party];
    }
    size_t party_bits(size_t party) const;
    size_t total_bits() const {
        return total_bits_;
    }
    /// Number of strategies; throws TooManyStrategies above 2^62.
    uint64_t count() const;

    DeterministicStrategy decode(uint64_t index) const;
    uint64_t encode(const DeterministicStrategy &strategy) const;

   private:
    std::vector<size_t> alphabet_sizes_;
    CommTopology topology_;
    std::vector<size_t> received_;
    std::vector<std::vector<size_t>> message_entries_;
    size_t total_bits_ = 0;
};

struct StrategyOutcome {
    size_t outcome;
    size_t bits_sent;
};

/// Runs the strategy on one profile (setting index per party).
StrategyOutcome evaluate(const DeterministicStrategy &strategy, const CommTopology &topology,
                         std::span<const size_t> settings);

struct EnumerationOptions {
    uint64_t max_strategies = 1'000'000;
    /// Keep only the first strategy for each induced table.
    bool deduplicate = false;
};

/// Every deterministic strategy in index order; throws TooManyStrategies
/// when the count exceeds the guard.
std::vector<DeterministicStrategy> enumerate_strategies(size_t parties, std::span<const size_t> alphabet_sizes,
                                                        const CommTopology &topology,
                                                        const EnumerationOptions &options = {});

/// Outcome index per profile, in profile order.
std::vector<size_t> strategy_outcomes(const DeterministicStrategy &strategy, const CommTopology &topology,
                                      std::span<const size_t> alphabet_sizes);

CorrelationTable strategy_table(const DeterministicStrategy &strategy, const CommTopology &topology,
                                const Alphabets &alphabets);

}  // namespace qsim

#endif
