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

#include "qsim/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "qsim/error.h"
#include "qsim/random_circuit.h"

namespace qsim {

std::vector<size_t> bench_schedule(BackendId backend, size_t min_n, size_t max_n) {
    std::vector<size_t> out;
    if (min_n == 0 || min_n > max_n) {
        return out;
    }
    if (backend == BackendId::kStateVector) {
        for (size_t n = min_n; n <= max_n; n++) {
            out.push_back(n);
        }
    } else {
        for (size_t n = min_n; n <= max_n; n *= 2) {
            out.push_back(n);
        }
    }
    return out;
}

BenchReport bench_scaling(const BenchConfig &config) {
    if (config.repeats == 0) {
        throw Error(ErrorCode::kBadParams, "repeats must be positive");
    }
    if (config.backend == BackendId::kStateVector && config.max_n > PureState::kMaxQubits &&
        config.min_n <= config.max_n) {
        throw Error(ErrorCode::kTooManyQubits,
                    "dense benchmarks are capped at " + std::to_string(PureState::kMaxQubits) + " qubits");
    }
    BenchReport report;
    report.backend = std::string(backend_name(config.backend));
    report.growth_kind =
        config.backend == BackendId::kStateVector ? "mean_log2_ratio_per_qubit" : "loglog_slope";
    for (size_t n : bench_schedule(config.backend, config.min_n, config.max_n)) {
        size_t depth = config.depth_scale_linear ? config.depth * n / config.min_n : config.depth;
        Circuit circuit = with_terminal_measurements(random_clifford_circuit(n, depth, config.seed + n));
        std::vector<double> times;
        for (size_t r = 0; r < config.repeats; r++) {
            auto start = std::chrono::steady_clock::now();
            auto result = run_backend(config.backend, circuit, config.shots, config.seed);
            auto stop = std::chrono::steady_clock::now();
            (void)result;
            times.push_back(std::chrono::duration<double>(stop - start).count());
        }
        std::sort(times.begin(), times.end());
        double median = times[times.size() / 2];
        if (times.size() % 2 == 0) {
            median = (times[times.size() / 2 - 1] + median) / 2;
        }
        report.rows.push_back({n, depth, config.shots, std::max(median, 1e-9)});
    }
    report.growth = config.backend == BackendId::kStateVector ? mean_log2_ratio_per_qubit(report.rows)
                                                              : loglog_slope(report.rows);
    return report;
}

std::optional<double> mean_log2_ratio_per_qubit(const std::vector<BenchRow> &rows) {
    if (rows.size() < 2) {
        return std::nullopt;
    }
    double total = 0;
    for (size_t i = 0; i + 1 < rows.size(); i++) {
        double dn = static_cast<double>(rows[i + 1].n) - static_cast<double>(rows[i].n);
        total += std::log2(rows[i + 1].seconds / rows[i].seconds) / dn;
    }
    return total / static_cast<double>(rows.size() - 1);
}

std::optional<double> loglog_slope(const std::vector<BenchRow> &rows) {
    if (rows.size() < 2) {
        return std::nullopt;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto &r : rows) {
        double x = std::log(static_cast<double>(r.n));
        double y = std::log(r.seconds);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double k = static_cast<double>(rows.size());
    double denom = k * sxx - sx * sx;
    if (denom == 0) {
        return std::nullopt;
    }
    return (k * sxy - sx * sy) / denom;
}

ChshCurve chsh_sweep(size_t steps) {
    if (steps == 0) {
        throw Error(ErrorCode::kBadParams, "a sweep needs at least one step");
    }
    ChshCurve curve;
    const PureState singlet = singlet_state();
    for (size_t k = 0; k <= steps; k++) {
        double t = (std::numbers::pi / 2) * static_cast<double>(k) / static_cast<double>(steps);
        ChshPoint p{t, 0, 2 * t, t, -t, 0};
        Setting a = equatorial_axis(p.a);
        Setting a2 = equatorial_axis(p.a2);
        Setting b = equatorial_axis(p.b);
        Setting b2 = equatorial_axis(p.b2);
        CorrelationTable table = quantum_table(singlet, {{a, a2}, {b, b2}});
        p.s = chsh_value(table, a, a2, b, b2);
        if (std::abs(p.s) > curve.max_abs_s) {
            curve.max_abs_s = std::abs(p.s);
            curve.argmax_t = t;
        }
        curve.points.push_back(p);
    }
    return curve;
}

double max_abs_chsh(const CorrelationTable &table) {
    if (table.parties() != 2) {
        throw Error(ErrorCode::kBadParams, "CHSH needs a two-party table");
    }
    const auto &as = table.alphabets()[0];
    const auto &bs = table.alphabets()[1];
    double best = 0;
    for (const auto &a : as) {
        for (const auto &a2 : as) {
            for (const auto &b : bs) {
                for (const auto &b2 : bs) {
                    best = std::max(best, std::abs(chsh_value(table, a, a2, b, b2)));
                }
            }
        }
    }
    return best;
}

}  // namespace qsim
