// Copyright 2026 The quiver authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quiver/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace quiver {

namespace {

std::string full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

Channel parse_channel(const std::string& name) {
    if (name == "x") return Channel::X;
    if (name == "y") return Channel::Y;
    if (name == "z") return Channel::Z;
    if (name == "general") return Channel::General;
    throw std::invalid_argument("unknown channel '" + name + "'");
}

std::vector<std::string> split(const std::string& list, char sep) {
    std::vector<std::string> parts;
    std::istringstream in(list);
    std::string part;
    while (std::getline(in, part, sep)) {
        part = trim(part);
        if (!part.empty()) parts.push_back(part);
    }
    return parts;
}

}  // namespace

std::vector<Channel> parse_channels(const std::string& list) {
    std::vector<Channel> channels;
    for (const std::string& name : split(list, ',')) {
        channels.push_back(parse_channel(name));
    }
    return channels;
}

void ExperimentConfig::validate() const {
    if (experiment == "mv1") {
        if (nq != 1) throw std::invalid_argument("mv1 requires nq=1");
        if (steps < 3) throw std::invalid_argument("mv1 requires steps >= 3");
    } else if (experiment == "mv2") {
        if (nq != 2) throw std::invalid_argument("mv2 requires nq=2");
        if (steps < 6) throw std::invalid_argument("mv2 requires steps >= 6");
    } else if (experiment == "mvn") {
        if (nq < 2) throw std::invalid_argument("mvn requires nq >= 2");
        if (steps < 2 * nq - 1) {
            throw std::invalid_argument("mvn requires steps >= 2*nq - 1");
        }
    } else if (experiment == "custom") {
        if (nq < 1) throw std::invalid_argument("custom requires nq >= 1");
        if (steps < 1) throw std::invalid_argument("custom requires steps >= 1");
    } else {
        throw std::invalid_argument("unknown experiment '" + experiment + "'");
    }
    if (format != "csv" && format != "json") {
        throw std::invalid_argument("format must be csv or json");
    }
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    model.validate();
}

ExperimentConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    ExperimentConfig config;
    bool seed_seen = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "experiment") config.experiment = value;
            else if (key == "nq") config.nq = std::stoi(value);
            else if (key == "steps") config.steps = std::stoi(value);
            else if (key == "p") config.model.p = std::stod(value);
            else if (key == "p1") config.model.p1 = std::stod(value);
            else if (key == "p2") config.model.p2 = std::stod(value);
            else if (key == "paths") config.model.paths = std::stoi(value);
            else if (key == "seed") {
                config.model.seed = std::stoull(value);
                seed_seen = true;
            } else if (key == "channels") {
                config.model.channels.clear();
                for (Channel c : parse_channels(value)) {
                    config.model.channels.insert(c);
                }
            } else if (key == "suppress") {
                config.suppress = parse_channels(value);
            } else if (key == "format") config.format = value;
            else if (key == "out") config.out = value;
            else if (key == "workers") config.workers = std::stoi(value);
            else throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": bad value for " + key);
        }
    }
    if (!seed_seen) {
        throw std::invalid_argument(path + ": seed is mandatory in config files");
    }
    return config;
}

Schedule build_schedule(const ExperimentConfig& config) {
    config.validate();
    const auto h_on = [](int q) {
        return ScheduleStep{AlgorithmOp{hadamard(), {q}, "H"}, true};
    };
    const auto cnot_on = [](int c, int t) {
        return ScheduleStep{AlgorithmOp{cnot(), {c, t}, "CNOT"}, true};
    };
    const ScheduleStep noise_only{std::nullopt, true};

    Schedule schedule;
    if (config.experiment == "mv1") {
        schedule.push_back(h_on(1));
        schedule.push_back(noise_only);
        schedule.push_back(h_on(1));
    } else if (config.experiment == "mv2") {
        schedule.push_back(h_on(1));
        schedule.push_back(noise_only);
        schedule.push_back(cnot_on(1, 2));
        schedule.push_back(noise_only);
        schedule.push_back(cnot_on(1, 2));
        schedule.push_back(h_on(1));
    } else if (config.experiment == "mvn") {
        schedule.push_back(h_on(1));
        for (int k = 2; k <= config.nq; ++k) {
            schedule.push_back(noise_only);
            schedule.push_back(cnot_on(1, k));
        }
    }
    // custom starts empty: pure storage
    while (static_cast<int>(schedule.size()) < config.steps) {
        schedule.push_back(noise_only);
    }
    return schedule;
}

StateVector initial_state(const ExperimentConfig& config) {
    return basis_state(config.nq, 0);
}

std::string trace_to_csv(const MetricsTrace& trace) {
    std::ostringstream out;
    out << "step,fidelity,purity,entropy";
    const int nq = trace.nq;
    const std::size_t dim = std::size_t{1} << nq;
    for (std::size_t i = 0; i < dim; ++i) out << ",eig_" << i;
    for (int q = 1; q <= nq; ++q) {
        out << ",q" << q << "_Px,q" << q << "_Py,q" << q << "_Pz";
    }
    const char* axes = "xyz";
    for (int a = 1; a <= nq; ++a) {
        for (int b = a + 1; b <= nq; ++b) {
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    out << ",q" << a << "q" << b << "_C" << axes[i]
                        << axes[j];
                }
            }
        }
    }
    out << "\n";
    for (const MetricsRecord& r : trace.records) {
        out << r.step << "," << full(r.fidelity) << "," << full(r.purity)
            << "," << full(r.entropy);
        for (double e : r.eigenvalues) out << "," << full(e);
        for (const auto& p : r.bloch.polarizations) {
            out << "," << full(p[0]) << "," << full(p[1]) << "," << full(p[2]);
        }
        for (const auto& c : r.bloch.correlations) {
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) out << "," << full(c(i, j));
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string trace_to_json(const MetricsTrace& trace) {
    nlohmann::json root;
    root["nq"] = trace.nq;
    nlohmann::json rows = nlohmann::json::array();
    for (const MetricsRecord& r : trace.records) {
        nlohmann::json row;
        row["step"] = r.step;
        row["fidelity"] = r.fidelity;
        row["purity"] = r.purity;
        row["entropy"] = r.entropy;
        row["eigenvalues"] = r.eigenvalues;
        nlohmann::json pol = nlohmann::json::array();
        for (const auto& p : r.bloch.polarizations) {
            pol.push_back({p[0], p[1], p[2]});
        }
        row["polarizations"] = pol;
        nlohmann::json cor = nlohmann::json::array();
        for (const auto& c : r.bloch.correlations) {
            nlohmann::json mat = nlohmann::json::array();
            for (int i = 0; i < 3; ++i) {
                mat.push_back({c(i, 0), c(i, 1), c(i, 2)});
            }
            cor.push_back(mat);
        }
        row["correlations"] = cor;
        rows.push_back(std::move(row));
    }
    root["records"] = std::move(rows);
    return root.dump(2) + "\n";
}

MultiverseResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    NoiseModel model = config.model;
    for (Channel c : config.suppress) {
        model = suppress_channel(model, c);
    }
    const Schedule schedule = build_schedule(config);
    MultiverseResult result = run_multiverse(initial_state(config), schedule,
                                             model, config.workers);
    std::ofstream out(config.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + config.out);
    out << (config.format == "csv" ? trace_to_csv(result.trace)
                                   : trace_to_json(result.trace));
    return result;
}

}  // namespace quiver
