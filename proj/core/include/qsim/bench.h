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

#ifndef QSIM_BENCH_H
#define QSIM_BENCH_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsim/backends.h"
#include "qsim/correlation_table.h"

namespace qsim {

struct BenchRow {
    size_t n;
    size_t depth;
    uint64_t shots;
    double seconds;
};

struct BenchReport {
    std::string backend;
    std::vector<BenchRow> rows;
    /// "mean_log2_ratio_per_qubit" for the dense backend, "loglog_slope" for
    /// the stabilizer backend.
    std::string growth_kind;
    /// Absent with fewer than two rows.
    std::optional<double> growth;
};

struct BenchConfig {
    BackendId backend = BackendId::kStateVector;
    size_t min_n = 2;
    size_t max_n = 2;
    size_t depth = 100;
    /// When set, the depth at n is depth * n / min_n.
    bool depth_scale_linear = false;
    uint64_t shots = 1;
    uint64_t seed = 0;
    size_t repeats = 3;
};

/// Qubit counts visited: every n in [min_n, max_n] for the dense backend,
/// min_n, 2 min_n, 4 min_n, ... up to max_n for the stabilizer backend.
std::vector<size_t> bench_schedule(BackendId backend, size_t min_n, size_t max_n);

/// Times random Clifford circuits (each ending in a Z measurement of every
/// qubit) with a monotonic clock around the backend call only, keeping the
/// median of `repeats` runs per point.
BenchReport bench_scaling(const BenchConfig &config);

/// Mean over consecutive rows of log2(t[i+1] / t[i]) / (n[i+1] - n[i]).
std::optional<double> mean_log2_ratio_per_qubit(const std::vector<BenchRow> &rows);

/// Least-squares slope of log t against log n.
std::optional<double> loglog_slope(const std::vector<BenchRow> &rows);

struct ChshPoint {
    double t;
    double a;
    double a2;
    double b;
    double b2;
    double s;
};

struct ChshCurve {
    std::vector<ChshPoint> points;
    double max_abs_s = 0;
    double argmax_t = 0;
};

/// Singlet CHSH value along a = 0, b = t, a' = 2t, b' = -t (equatorial
/// azimuths) for t = k (pi/2) / steps, k = 0..steps. |S| = |3 cos t - cos 3t|,
/// peaking at 2 sqrt(2) for t = pi/4.
ChshCurve chsh_sweep(size_t steps);

/// Largest |S| over all ordered quadruples of settings drawn from a
/// two-party table's alphabets.
double max_abs_chsh(const CorrelationTable &table);

}  // namespace qsim

#endif
