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

#ifndef QSIM_PARSER_H
#define QSIM_PARSER_H

#include <filesystem>
#include <string>
#include <string_view>

#include "qsim/circuit.h"

namespace qsim {

/// Parses the line-oriented `.qc` circuit format.
///
///     qubits 2          # required first line
///     cbits 1           # optional second line
///     h q0
///     cnot q0 q1
///     oracle 01 q0 -> q1
///     measure q0 Z -> c0
///     cif c0 x q1
///
/// Keywords are case-insensitive and `#` starts a comment. Errors are thrown
/// as qsim::Error carrying the 1-based line number.
Circuit parse_circuit(std::string_view text);

Circuit load_circuit_file(const std::filesystem::path &path);

/// Canonical text form; `parse_circuit(to_text(c)) == c` for every valid c.
std::string to_text(const Circuit &circuit);

}  // namespace qsim

#endif
