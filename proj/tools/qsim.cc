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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qsim/backends.h"
#include "qsim/bench.h"
#include "qsim/error.h"
#include "qsim/local_model.h"
#include "qsim/parser.h"
#include "qsim/report.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBackend = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

uint64_t default_seed() {
    const char *env = std::getenv("QSIM_SEED");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') {
        throw UsageError(std::string("QSIM_SEED is not an unsigned integer: ") + env);
    }
    return v;
}

void emit(const std::string &text, const std::string &out) {
    if (out.empty()) {
        std::cout << text;
    } else {
        qsim::write_report(text, out);
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

qsim::BackendId parse_backend(const std::string &name) {
    if (name == "sv") {
        return qsim::BackendId::kStateVector;
    }
    if (name == "stab") {
        return qsim::BackendId::kStabilizer;
    }
    throw UsageError("unknown backend '" + name + "' (expected sv or stab)");
}

bool is_input_error(qsim::ErrorCode code) {
    switch (code) {
        case qsim::ErrorCode::kUnknownGate:
        case qsim::ErrorCode::kArityMismatch:
        case qsim::ErrorCode::kIndexOutOfRange:
        case qsim::ErrorCode::kMalformedHeader:
        case qsim::ErrorCode::kUndefinedConditionBit:
        case qsim::ErrorCode::kSyntax:
        case qsim::ErrorCode::kDuplicateQubit:
        case qsim::ErrorCode::kUnknownName:
        case qsim::ErrorCode::kBadParams:
            return true;
        default:
            return false;
    }
}

struct RunArgs {
    std::string backend;
    uint64_t shots = 1000;
    std::optional<uint64_t> seed;
    std::string out;
    std::string circuit;
};

int do_run(const RunArgs &args) {
    qsim::Circuit circuit;
    try {
        circuit = qsim::load_circuit_file(args.circuit);
    } catch (const qsim::Error &e) {
        std::cerr << args.circuit << ": " << e.what() << "\n";
        return kExitUsage;
    }
    auto backend = args.backend.empty() ? qsim::choose_backend(circuit) : parse_backend(args.backend);
    auto result = qsim::run_backend(backend, circuit, args.shots, args.seed.value_or(default_seed()));
    emit(qsim::to_json(result), args.out);
    return kExitOk;
}

struct BenchArgs {
    std::string backend;
    size_t min_n = 0;
    size_t max_n = 0;
    size_t depth = 0;
    std::string depth_scale;
    uint64_t shots = 1;
    std::optional<uint64_t> seed;
    std::string out;
};

int do_bench(const BenchArgs &args) {
    qsim::BenchConfig config;
    config.backend = parse_backend(args.backend);
    config.min_n = args.min_n;
    config.max_n = args.max_n;
    config.depth = args.depth;
    if (!args.depth_scale.empty() && args.depth_scale != "linear") {
        throw UsageError("unknown depth scale '" + args.depth_scale + "' (expected linear)");
    }
    config.depth_scale_linear = args.depth_scale == "linear";
    config.shots = args.shots;
    config.seed = args.seed.value_or(default_seed());
    auto report = qsim::bench_scaling(config);
    bool csv = !args.out.empty() && qsim::format_for_path(args.out) == qsim::ReportFormat::kCsv;
    emit(csv ? qsim::to_csv(report) : qsim::to_json(report), args.out);
    return kExitOk;
}

struct ChshArgs {
    size_t steps = 16;
    std::optional<uint64_t> seed;
    std::string out;
};

int do_chsh(const ChshArgs &args) {
    // The sweep is exact, so the seed only needs to parse.
    (void)args.seed.value_or(default_seed());
    auto curve = qsim::chsh_sweep(args.steps);
    bool csv = !args.out.empty() && qsim::format_for_path(args.out) == qsim::ReportFormat::kCsv;
    emit(csv ? qsim::to_csv(curve) : qsim::to_json(curve), args.out);
    return kExitOk;
}

struct FindArgs {
    std::string state;
    size_t bits = 0;
    std::string topology;
    std::string settings = "XYZ";
    std::string out;
};

qsim::Alphabets alphabets_from(const std::string &letters, size_t parties) {
    std::vector<qsim::Setting> alphabet;
    for (char c : letters) {
        auto axis = qsim::axis_from_name(std::string_view(&c, 1));
        if (!axis.has_value()) {
            throw UsageError(std::string("unknown setting '") + c + "'");
        }
        alphabet.push_back(*axis);
    }
    if (alphabet.empty()) {
        throw UsageError("--settings must name at least one Pauli axis");
    }
    return qsim::Alphabets(parties, alphabet);
}

int do_find(const FindArgs &args) {
    qsim::PureState state = qsim::singlet_state();
    if (args.state == "singlet") {
        state = qsim::singlet_state();
    } else if (args.state.rfind("ghz", 0) == 0 && args.state.size() > 3) {
        size_t n = std::stoul(args.state.substr(3));
        if (n < 2 || n > 8) {
            throw UsageError("GHZ states are supported for 2 to 8 parties");
        }
        state = qsim::ghz_state(n);
    } else {
        throw UsageError("unknown state '" + args.state + "' (expected singlet or ghzN)");
    }
    const size_t parties = state.num_qubits();
    std::string topology_text = args.topology;
    if (topology_text.empty() && args.bits > 0) {
        if (parties == 3 && args.bits == 1) {
            topology_text = "2>1";
        } else {
            throw UsageError("--topology is required for this state and bit budget");
        }
    }
    auto topology = qsim::CommTopology::parse(topology_text);
    if (topology.budget() != args.bits) {
        throw UsageError("topology '" + topology.str() + "' sends " + std::to_string(topology.budget()) +
                         " bits but --bits is " + std::to_string(args.bits));
    }
    topology.validate(parties);
    auto target = qsim::quantum_table(state, alphabets_from(args.settings, parties));
    auto search = qsim::find_local_model(target, topology);
    emit(qsim::to_json(search, target), args.out);
    return kExitOk;
}

struct SimulateArgs {
    std::string model;
    uint64_t shots = 100000;
    std::optional<uint64_t> seed;
    std::string out;
};

int do_simulate(const SimulateArgs &args) {
    auto model = qsim::model_from_json(read_file(args.model));
    auto result = qsim::simulate_model(model, args.shots, args.seed.value_or(default_seed()));
    emit(qsim::to_json(result), args.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qsim: quantum circuit simulators and a locality laboratory"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto *run = app.add_subcommand("run", "Run a circuit file and print outcome counts");
    run->add_option("--backend", run_args.backend, "sv or stab (default: stab when the circuit allows it)");
    run->add_option("--shots", run_args.shots, "Number of shots");
    run->add_option("--seed", run_args.seed, "RNG seed (default: $QSIM_SEED or 0)");
    run->add_option("--out", run_args.out, "Write JSON here instead of stdout");
    run->add_option("circuit", run_args.circuit, "Circuit file")->required();

    BenchArgs bench_args;
    auto *bench = app.add_subcommand("bench", "Time random Clifford circuits over a range of sizes");
    bench->add_option("--backend", bench_args.backend, "sv or stab")->required();
    bench->add_option("--min-n", bench_args.min_n, "Smallest qubit count")->required();
    bench->add_option("--max-n", bench_args.max_n, "Largest qubit count")->required();
    bench->add_option("--depth", bench_args.depth, "Circuit depth")->required();
    bench->add_option("--depth-scale", bench_args.depth_scale, "linear: depth grows with n");
    bench->add_option("--shots", bench_args.shots, "Shots per run");
    bench->add_option("--seed", bench_args.seed, "RNG seed (default: $QSIM_SEED or 0)");
    bench->add_option("--out", bench_args.out, "Output file (.csv or .json)");

    ChshArgs chsh_args;
    auto *bell = app.add_subcommand("bell", "Bell inequality experiments");
    bell->require_subcommand(1);
    auto *chsh = bell->add_subcommand("chsh", "Sweep CHSH angles on the singlet");
    chsh->add_option("--steps", chsh_args.steps, "Number of sweep intervals")->check(CLI::PositiveNumber);
    chsh->add_option("--seed", chsh_args.seed, "RNG seed (default: $QSIM_SEED or 0)");
    chsh->add_option("--out", chsh_args.out, "Output file (.csv or .json)");

    auto *lhv = app.add_subcommand("lhv", "Local hidden-variable models");
    lhv->require_subcommand(1);
    FindArgs find_args;
    auto *find = lhv->add_subcommand("find", "Search for a communication-assisted local model");
    find->add_option("--state", find_args.state, "singlet or ghzN")->required();
    find->add_option("--bits", find_args.bits, "Number of one-bit messages");
    find->add_option("--topology", find_args.topology, "Messages such as \"2>1,3>2\" (1-based parties)");
    find->add_option("--settings", find_args.settings, "Pauli letters available to every party");
    find->add_option("--out", find_args.out, "Write JSON here instead of stdout");
    SimulateArgs sim_args;
    auto *simulate = lhv->add_subcommand("simulate", "Sample a model file");
    simulate->add_option("--model", sim_args.model, "Model or search JSON")->required();
    simulate->add_option("--shots", sim_args.shots, "Number of shots");
    simulate->add_option("--seed", sim_args.seed, "RNG seed (default: $QSIM_SEED or 0)");
    simulate->add_option("--out", sim_args.out, "Write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) {
            return do_run(run_args);
        }
        if (bench->parsed()) {
            return do_bench(bench_args);
        }
        if (chsh->parsed()) {
            return do_chsh(chsh_args);
        }
        if (find->parsed()) {
            return do_find(find_args);
        }
        if (simulate->parsed()) {
            return do_simulate(sim_args);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qsim::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e.code()) ? kExitUsage : kExitBackend;
    }
    return kExitUsage;
}
