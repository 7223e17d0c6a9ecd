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

#ifndef QSIM_ERROR_H
#define QSIM_ERROR_H

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qsim {

enum class ErrorCode {
    kUnknownGate,
    kArityMismatch,
    kIndexOutOfRange,
    kMalformedHeader,
    kUndefinedConditionBit,
    kSyntax,
    kTooManyQubits,
    kDegenerateNorm,
    kDuplicateQubit,
    kNonClifford,
    kUnknownProfile,
    kTooManyStrategies,
    kUnknownName,
    kBadParams,
    kIoError,
};

std::string_view to_string(ErrorCode code);

/// Exception type thrown by every fallible qsim operation.
///
/// Parse errors carry the 1-based source line; backend errors raised while
/// executing a circuit carry the index of the offending op.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message, std::optional<size_t> line = std::nullopt,
          std::optional<size_t> op_index = std::nullopt);

    ErrorCode code() const noexcept {
        return code_;
    }
    std::optional<size_t> line() const noexcept {
        return line_;
    }
    std::optional<size_t> op_index() const noexcept {
        return op_index_;
    }

   private:
    ErrorCode code_;
    std::optional<size_t> line_;
    std::optional<size_t> op_index_;
};

}  // namespace qsim

#endif
