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

#ifndef QSIM_REPORT_H
#define QSIM_REPORT_H

#include <filesystem>
#include <string>
#include <string_view>

#include "qsim/backends.h"
#include "qsim/bench.h"
#include "qsim/correlation_table.h"
#include "qsim/local_model.h"

namespace qsim {

// Every serializer below is byte-stable: object keys are sorted and floats
// are rounded to 12 significant digits.

enum class ReportFormat { kJson, kCsv };

/// kCsv for a ".csv" extension, kJson otherwise.
ReportFormat format_for_path(const std::filesystem::path &path);

/// printf("%.12g") formatting.
std::string format_double(double value);

std::string to_json(const RunResult &result);
std::string to_json(const BenchReport &report);
std::string to_csv(const BenchReport &report);
std::string to_json(const CorrelationTable &table);
std::string to_json(const ChshCurve &curve);
std::string to_csv(const ChshCurve &curve);

/// Model file: {alphabets, strategies, topology, weights} plus exact_weights
/// as "p/q" strings when known.
std::string to_json(const LocalModel &model);
/// Accepts a model file or a search document embedding one. Throws
/// BadParams on malformed documents.
LocalModel model_from_json(std::string_view text);

/// Search outcome; embeds the model file or the separating inequality.
std::string to_json(const LocalModelSearch &search, const CorrelationTable &target);

std::string to_json(const SimulationResult &result);

/// Writes `contents` to `path`, replacing any existing file; throws IoError.
void write_report(std::string_view contents, const std::filesystem::path &path);

}  // namespace qsim

#endif
