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

#include "qsim/error.h"

namespace qsim {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::kUnknownGate:
            return "UnknownGate";
        case ErrorCode::kArityMismatch:
            return "ArityMismatch";
        case ErrorCode::kIndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::kMalformedHeader:
            return "MalformedHeader";
        case ErrorCode::kUndefinedConditionBit:
            return "UndefinedConditionBit";
        case ErrorCode::kSyntax:
            return "Syntax";
        case ErrorCode::kTooManyQubits:
            return "TooManyQubits";
        case ErrorCode::kDegenerateNorm:
            return "DegenerateNorm";
        case ErrorCode::kDuplicateQubit:
            return "DuplicateQubit";
        case ErrorCode::kNonClifford:
            return "NonClifford";
        case ErrorCode::kUnknownProfile:
            return "UnknownProfile";
        case ErrorCode::kTooManyStrategies:
            return "TooManyStrategies";
        case ErrorCode::kUnknownName:
            return "UnknownName";
        case ErrorCode::kBadParams:
            return "BadParams";
        case ErrorCode::kIoError:
            return "IoError";
    }
    return "Unknown";
}

static std::string decorate(ErrorCode code, const std::string &message, std::optional<size_t> line,
                            std::optional<size_t> op_index) {
    std::string out(to_string(code));
    if (line.has_value()) {
        out += " at line " + std::to_string(*line);
    }
    if (op_index.has_value()) {
        out += " at op " + std::to_string(*op_index);
    }
    out += ": ";
    out += message;
    return out;
}

Error::Error(ErrorCode code, const std::string &message, std::optional<size_t> line, std::optional<size_t> op_index)
    : std::runtime_error(decorate(code, message, line, op_index)), code_(code), line_(line), op_index_(op_index) {
}

}  // namespace qsim
