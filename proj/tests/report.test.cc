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

#include "qsim/report.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

#include "qsim/library.h"
#include "qsim/parser.h"

using namespace qsim;
using json = nlohmann::json;

TEST(format_for_path, extension) {
    ASSERT_EQ(format_for_path("a/b.csv"), ReportFormat::kCsv);
    ASSERT_EQ(format_for_path("a/b.json"), ReportFormat::kJson);
    ASSERT_EQ(format_for_path("out"), ReportFormat::kJson);
}

TEST(format_double, stable) {
    ASSERT_EQ(format_double(0.5), "0.5");
    ASSERT_EQ(format_double(-0.0), "0");
    ASSERT_EQ(format_double(1.0 / 3), "0.333333333333");
}

TEST(to_json, run_result_schema) {
    RunResult r;
    r.backend = "stabilizer";
    r.shots = 10;
    r.seed = 3;
    r.rng_id = "xoshiro256**";
    r.counts = {{"01", 4}, {"10", 6}};
    auto j = json::parse(to_json(r));
    ASSERT_EQ(j["backend"], "stabilizer");
    ASSERT_EQ(j["shots"], 10);
    ASSERT_EQ(j["seed"], 3);
    ASSERT_EQ(j["counts"]["01"], 4);
    ASSERT_EQ(j["counts"]["10"], 6);
    ASSERT_EQ(to_json(r), to_json(r));
}

TEST(to_json, correlation_table_schema) {
    auto t = quantum_table(singlet_state(), pauli_alphabets(2));
    auto j = json::parse(to_json(t));
    ASSERT_EQ(j["parties"], 2);
    ASSERT_EQ(j["profiles"].size(), 9u);
    ASSERT_EQ(j["profiles"][0]["correlator"], -1.0);
    ASSERT_EQ(j["profiles"][0]["distribution"]["+-"], 0.5);
    ASSERT_EQ(j["profiles"][0]["distribution"]["++"], 0.0);
}

TEST(to_csv, bench_report) {
    BenchReport r;
    r.backend = "statevector";
    r.rows = {{14, 100, 1, 0.25}, {15, 100, 1, 0.5}};
    ASSERT_EQ(to_csv(r), "n,depth,shots,seconds\n14,100,1,0.25\n15,100,1,0.5\n");
    r.growth_kind = "mean_log2_ratio_per_qubit";
    r.growth = 1.0;
    auto j = json::parse(to_json(r));
    ASSERT_EQ(j["growth"]["value"], 1.0);
    ASSERT_EQ(j["rows"].size(), 2u);
}

TEST(to_csv, chsh_curve) {
    auto c = chsh_sweep(2);
    auto csv = to_csv(c);
    ASSERT_EQ(csv.substr(0, csv.find('\n')), "t,a,a2,b,b2,s");
    ASSERT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
    auto j = json::parse(to_json(c));
    ASSERT_EQ(j["points"].size(), 3u);
}

TEST(model_json, round_trip) {
    auto model = singlet_pauli_lhv();
    auto text = to_json(model);
    auto back = model_from_json(text);
    ASSERT_EQ(back.alphabets, model.alphabets);
    ASSERT_EQ(back.strategies, model.strategies);
    ASSERT_EQ(back.weights, model.weights);
    ASSERT_EQ(to_json(back), text);

    auto q = quantum_table(ghz_state(3), pauli_alphabets(3));
    auto s = find_local_model(q, CommTopology::parse("2>1"));
    auto doc = to_json(s, q);
    auto from_doc = model_from_json(doc);
    ASSERT_EQ(from_doc.topology.str(), "2>1");
    ASSERT_EQ(from_doc.exact_weights, s.model->exact_weights);
    ASSERT_EQ(to_json(from_doc), to_json(*s.model));
}

TEST(model_json, rejects_malformed) {
    ASSERT_THROW(model_from_json("{"), Error);
    ASSERT_THROW(model_from_json("{}"), Error);
    auto j = json::parse(to_json(singlet_pauli_lhv()));
    j["weights"][0] = 0.9;
    ASSERT_THROW(model_from_json(j.dump()), Error);
    j = json::parse(to_json(singlet_pauli_lhv()));
    j["strategies"][0][0]["outputs"][0] = 0;
    ASSERT_THROW(model_from_json(j.dump()), Error);
}

TEST(search_json, certificate) {
    auto q = quantum_table(ghz_state(3), pauli_alphabets(3));
    auto s = find_local_model(q, CommTopology());
    auto j = json::parse(to_json(s, q));
    ASSERT_EQ(j["feasible"], false);
    ASSERT_EQ(j["exact"], true);
    ASSERT_FALSE(j.contains("model"));
    ASSERT_GT(j["certificate"]["violation"].get<double>(), 0);
    ASSERT_GT(j["certificate"]["terms"].size(), 0u);
    // Recompute the value from the listed terms.
    long total = 0;
    for (const auto &term : j["certificate"]["terms"]) {
        SettingProfile profile;
        for (const auto &name : term["settings"]) {
            auto axis = name.get<std::string>();
            profile.push_back(axis == "X" ? PauliAxis::kX : axis == "Y" ? PauliAxis::kY : PauliAxis::kZ);
        }
        size_t outcome = 0;
        for (char c : term["outcome"].get<std::string>()) {
            outcome = outcome * 2 + (c == '-');
        }
        double p = q.probability(*q.find_profile(profile), outcome);
        total += term["coefficient"].get<long>() * static_cast<long>(std::lround(p * 8));
    }
    double value = static_cast<double>(total) / 8 - j["certificate"]["bound"].get<double>();
    ASSERT_NEAR(value, j["certificate"]["violation"].get<double>(), 1e-9);
}

TEST(simulation_json, mermin) {
    auto model = singlet_pauli_lhv();
    auto r = simulate_model(model, 100, 1);
    auto j = json::parse(to_json(r));
    ASSERT_EQ(j["bits_used_per_shot"], 0);
    ASSERT_FALSE(j.contains("mermin"));
    uint64_t total = 0;
    for (const auto &p : j["profiles"]) {
        total += p["shots"].get<uint64_t>();
    }
    ASSERT_EQ(total, 100u);
}

TEST(write_report, writes_and_fails) {
    auto path = std::filesystem::temp_directory_path() / "qsim_report_test.json";
    write_report("abc\n", path);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    ASSERT_EQ(ss.str(), "abc\n");
    std::filesystem::remove(path);
    try {
        write_report("x", "/nonexistent_dir_qsim/out.json");
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::kIoError);
    }
}

TEST(to_json, byte_identical_runs) {
    auto c = gk_entangler_circuit();
    auto a = to_json(run_stabilizer(c, 1000, 5));
    auto b = to_json(run_stabilizer(c, 1000, 5));
    ASSERT_EQ(a, b);
}
