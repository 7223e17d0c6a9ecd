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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qsim/error.h"

namespace qsim {

using nlohmann::json;

namespace {

double round12(double value) {
    return std::strtod(format_double(value).c_str(), nullptr);
}

std::string dump(const json &j) {
    return j.dump(2) + "\n";
}

json setting_json(const Setting &s) {
    if (const auto *p = std::get_if<PauliAxis>(&s)) {
        return std::string(1, axis_name(*p));
    }
    const auto &b = std::get<BlochAxis>(s);
    return json{{"phi", round12(b.phi)}, {"theta", round12(b.theta)}};
}

Setting setting_from_json(const json &j) {
    if (j.is_string()) {
        auto text = j.get<std::string>();
        auto axis = axis_from_name(text);
        if (!axis.has_value()) {
            throw Error(ErrorCode::kBadParams, "unknown setting '" + text + "'");
        }
        return *axis;
    }
    if (j.is_object()) {
        return BlochAxis{j.at("theta").get<double>(), j.at("phi").get<double>()};
    }
    throw Error(ErrorCode::kBadParams, "settings are Pauli letters or {theta, phi} objects");
}

json alphabets_json(const Alphabets &alphabets) {
    json out = json::array();
    for (const auto &a : alphabets) {
        json row = json::array();
        for (const auto &s : a) {
            row.push_back(setting_json(s));
        }
        out.push_back(row);
    }
    return out;
}

std::string outcome_label(size_t outcome, size_t parties) {
    std::string out;
    for (size_t p = 0; p < parties; p++) {
        out += ((outcome >> (parties - 1 - p)) & 1) ? '-' : '+';
    }
    return out;
}

json profile_json(const CorrelationTable &table, size_t k) {
    json settings = json::array();
    for (const auto &s : table.profile(k)) {
        settings.push_back(setting_json(s));
    }
    return settings;
}

json exact_integer(const mpz_class &v) {
    if (v.fits_slong_p()) {
        return v.get_si();
    }
    return v.get_str();
}

}  // namespace

ReportFormat format_for_path(const std::filesystem::path &path) {
    return path.extension() == ".csv" ? ReportFormat::kCsv : ReportFormat::kJson;
}

std::string format_double(double value) {
    if (value == 0) {
        value = 0;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string to_json(const RunResult &result) {
    json counts = json::object();
    for (const auto &[key, count] : result.counts) {
        counts[key] = count;
    }
    return dump(json{{"backend", result.backend},
                     {"counts", counts},
                     {"rng_id", result.rng_id},
                     {"seed", result.seed},
                     {"shots", result.shots}});
}

std::string to_json(const BenchReport &report) {
    json rows = json::array();
    for (const auto &r : report.rows) {
        rows.push_back({{"depth", r.depth}, {"n", r.n}, {"seconds", round12(r.seconds)}, {"shots", r.shots}});
    }
    json growth = report.growth.has_value() ? json(round12(*report.growth)) : json(nullptr);
    return dump(json{{"backend", report.backend},
                     {"growth", {{"kind", report.growth_kind}, {"value", growth}}},
                     {"rows", rows}});
}

std::string to_csv(const BenchReport &report) {
    std::string out = "n,depth,shots,seconds\n";
    for (const auto &r : report.rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.depth) + "," + std::to_string(r.shots) + "," +
               format_double(r.seconds) + "\n";
    }
    return out;
}

std::string to_json(const CorrelationTable &table) {
    json profiles = json::array();
    for (size_t k = 0; k < table.profile_count(); k++) {
        json dist = json::object();
        auto d = table.distribution(k);
        for (size_t o = 0; o < d.size(); o++) {
            dist[outcome_label(o, table.parties())] = round12(d[o]);
        }
        profiles.push_back({{"distribution", dist},
                            {"correlator", round12(correlator_at(table, k))},
                            {"settings", profile_json(table, k)}});
    }
    return dump(json{{"alphabets", alphabets_json(table.alphabets())},
                     {"parties", table.parties()},
                     {"profiles", profiles}});
}

std::string to_json(const ChshCurve &curve) {
    json points = json::array();
    for (const auto &p : curve.points) {
        points.push_back({{"a", round12(p.a)},
                          {"a2", round12(p.a2)},
                          {"b", round12(p.b)},
                          {"b2", round12(p.b2)},
                          {"s", round12(p.s)},
                          {"t", round12(p.t)}});
    }
    return dump(json{{"argmax_t", round12(curve.argmax_t)},
                     {"max_abs_s", round12(curve.max_abs_s)},
                     {"points", points}});
}

std::string to_csv(const ChshCurve &curve) {
    std::string out = "t,a,a2,b,b2,s\n";
    for (const auto &p : curve.points) {
        out += format_double(p.t) + "," + format_double(p.a) + "," + format_double(p.a2) + "," +
               format_double(p.b) + "," + format_double(p.b2) + "," + format_double(p.s) + "\n";
    }
    return out;
}

namespace {

json model_json(const LocalModel &model) {
    json strategies = json::array();
    for (const auto &s : model.strategies) {
        json parties = json::array();
        for (const auto &p : s.parties) {
            json outputs = json::array();
            for (auto v : p.outputs) {
                outputs.push_back(static_cast<int>(v));
            }
            json messages = json::array();
            for (const auto &m : p.messages) {
                json bits = json::array();
                for (auto v : m) {
                    bits.push_back(static_cast<int>(v));
                }
                messages.push_back(bits);
            }
            parties.push_back({{"messages", messages}, {"outputs", outputs}});
        }
        strategies.push_back(parties);
    }
    json weights = json::array();
    for (double w : model.weights) {
        weights.push_back(round12(w));
    }
    json out{{"alphabets", alphabets_json(model.alphabets)},
             {"strategies", strategies},
             {"topology", model.topology.str()},
             {"weights", weights}};
    if (!model.exact_weights.empty()) {
        json exact = json::array();
        for (const auto &w : model.exact_weights) {
            exact.push_back(w.get_str());
        }
        out["exact_weights"] = exact;
    }
    return out;
}

}  // namespace

std::string to_json(const LocalModel &model) {
    return dump(model_json(model));
}

LocalModel model_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorCode::kBadParams, std::string("model file is not valid JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("model")) {
        j = json(j.at("model"));
    }
    LocalModel model;
    try {
        for (const auto &row : j.at("alphabets")) {
            std::vector<Setting> alphabet;
            for (const auto &s : row) {
                alphabet.push_back(setting_from_json(s));
            }
            model.alphabets.push_back(std::move(alphabet));
        }
        model.topology = CommTopology::parse(j.at("topology").get<std::string>());
        for (const auto &s : j.at("strategies")) {
            DeterministicStrategy strategy;
            for (const auto &p : s) {
                PartyStrategy party;
                for (const auto &v : p.at("outputs")) {
                    int x = v.get<int>();
                    if (x != 1 && x != -1) {
                        throw Error(ErrorCode::kBadParams, "outputs must be +1 or -1");
                    }
                    party.outputs.push_back(static_cast<int8_t>(x));
                }
                for (const auto &m : p.at("messages")) {
                    std::vector<uint8_t> bits;
                    for (const auto &v : m) {
                        int x = v.get<int>();
                        if (x != 0 && x != 1) {
                            throw Error(ErrorCode::kBadParams, "message bits must be 0 or 1");
                        }
                        bits.push_back(static_cast<uint8_t>(x));
                    }
                    party.messages.push_back(std::move(bits));
                }
                strategy.parties.push_back(std::move(party));
            }
            model.strategies.push_back(std::move(strategy));
        }
        for (const auto &w : j.at("weights")) {
            model.weights.push_back(w.get<double>());
        }
        if (j.contains("exact_weights")) {
            for (const auto &w : j.at("exact_weights")) {
                Rational q(w.get<std::string>());
                q.canonicalize();
                model.exact_weights.push_back(q);
            }
        }
    } catch (const json::exception &e) {
        throw Error(ErrorCode::kBadParams, std::string("malformed model file: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw Error(ErrorCode::kBadParams, std::string("malformed model file: ") + e.what());
    }
    validate_model(model);
    return model;
}

std::string to_json(const LocalModelSearch &search, const CorrelationTable &target) {
    json out{{"exact", search.exact},
             {"feasible", search.feasible},
             {"iterations", search.iterations},
             {"strategies_considered", search.strategies_considered}};
    if (search.model.has_value()) {
        out["model"] = model_json(*search.model);
        out["topology"] = search.model->topology.str();
    }
    if (search.certificate.has_value()) {
        const auto &c = *search.certificate;
        json terms = json::array();
        for (size_t r = 0; r < c.coefficients.size(); r++) {
            bool nonzero = c.exact_coefficients.empty() ? c.coefficients[r] != 0 : c.exact_coefficients[r] != 0;
            if (!nonzero) {
                continue;
            }
            size_t k = r / target.outcome_count();
            size_t o = r % target.outcome_count();
            json coeff =
                c.exact_coefficients.empty() ? json(round12(c.coefficients[r])) : exact_integer(c.exact_coefficients[r]);
            terms.push_back({{"coefficient", coeff},
                             {"outcome", outcome_label(o, target.parties())},
                             {"settings", profile_json(target, k)}});
        }
        json bound = c.exact_coefficients.empty() ? json(round12(c.bound)) : exact_integer(c.exact_bound);
        out["certificate"] = {{"bound", bound}, {"terms", terms}, {"violation", round12(c.violation)}};
    }
    return dump(out);
}

std::string to_json(const SimulationResult &result) {
    const auto &table = result.empirical;
    json profiles = json::array();
    for (size_t k = 0; k < table.profile_count(); k++) {
        profiles.push_back({{"correlator", round12(correlator_at(table, k))},
                            {"settings", profile_json(table, k)},
                            {"shots", result.profile_shots[k]}});
    }
    json out{{"bits_used_per_shot", result.bits_used_per_shot}, {"profiles", profiles}};
    if (table.parties() == 3) {
        bool has_xy = true;
        for (const auto &a : table.alphabets()) {
            has_xy = has_xy && std::find(a.begin(), a.end(), Setting(PauliAxis::kX)) != a.end() &&
                     std::find(a.begin(), a.end(), Setting(PauliAxis::kY)) != a.end();
        }
        if (has_xy) {
            auto m = mermin_correlators(table);
            out["mermin"] = {round12(m[0]), round12(m[1]), round12(m[2]), round12(m[3])};
        }
    }
    return dump(out);
}

void write_report(std::string_view contents, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "' for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
        throw Error(ErrorCode::kIoError, "failed writing '" + path.string() + "'");
    }
}

}  // namespace qsim
