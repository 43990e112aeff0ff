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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "quiver/display.hpp"
#include "quiver/experiment.hpp"

namespace {

struct CliOptions {
    std::string config_path;
    std::optional<std::string> experiment;
    std::optional<int> nq;
    std::optional<std::uint64_t> seed;
    std::optional<int> steps;
    std::optional<int> paths;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::optional<std::string> suppress;
    std::optional<int> workers;
};

void add_common_flags(CLI::App* cmd, CliOptions& opts) {
    cmd->add_option("--config", opts.config_path, "config file (key=value)");
    cmd->add_option("--experiment", opts.experiment, "mv1|mv2|mvn|custom");
    cmd->add_option("--nq", opts.nq, "qubit count");
    cmd->add_option("--seed", opts.seed, "RNG seed");
    cmd->add_option("--steps", opts.steps, "schedule length");
    cmd->add_option("--paths", opts.paths, "noise paths per step");
    cmd->add_option("--format", opts.format, "csv|json");
    cmd->add_option("--out", opts.out, "trace output path");
    cmd->add_option("--suppress", opts.suppress,
                    "channels to force to identity, e.g. x,y,z,general");
    cmd->add_option("--workers", opts.workers, "worker thread count");
}

quiver::ExperimentConfig resolve_config(const CliOptions& opts) {
    quiver::ExperimentConfig config;
    if (!opts.config_path.empty()) {
        config = quiver::parse_config(opts.config_path);
    }
    if (opts.experiment) config.experiment = *opts.experiment;
    if (opts.nq) config.nq = *opts.nq;
    if (opts.seed) config.model.seed = *opts.seed;
    if (opts.steps) config.steps = *opts.steps;
    if (opts.paths) config.model.paths = *opts.paths;
    if (opts.format) config.format = *opts.format;
    if (opts.out) config.out = *opts.out;
    if (opts.suppress) config.suppress = quiver::parse_channels(*opts.suppress);
    if (opts.workers) config.workers = *opts.workers;
    if (config.experiment == "mv1") config.nq = 1;
    if (config.experiment == "mv2") config.nq = 2;
    config.validate();
    return config;
}

// Applies the schedule's gates to a pure state, ignoring noise.
quiver::StateVector noiseless_output(const quiver::ExperimentConfig& config) {
    quiver::StateVector psi = quiver::initial_state(config);
    for (const quiver::ScheduleStep& step : quiver::build_schedule(config)) {
        if (!step.op) continue;
        const quiver::AlgorithmOp& op = *step.op;
        switch (op.gate.arity()) {
            case 1: psi = quiver::op1(op.gate, op.qubits[0], psi); break;
            case 2: psi = quiver::op2(op.gate, op.qubits[0], op.qubits[1], psi); break;
            default:
                psi = quiver::op3(op.gate, op.qubits[0], op.qubits[1],
                                  op.qubits[2], psi);
        }
    }
    return psi;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quiver: multiverse noise-ensemble quantum simulator"};
    app.require_subcommand(1);

    CliOptions opts;
    CLI::App* run = app.add_subcommand("run", "run an experiment and write its metrics trace");
    add_common_flags(run, opts);
    CLI::App* suppress =
        app.add_subcommand("suppress", "rerun an experiment with channels forced off");
    add_common_flags(suppress, opts);
    CLI::App* show =
        app.add_subcommand("show-state", "print the noiseless output state of an experiment");
    add_common_flags(show, opts);
    CLI::App* draw = app.add_subcommand("draw", "print the experiment circuit");
    add_common_flags(draw, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed() || suppress->parsed()) {
            if (suppress->parsed() && !opts.suppress) {
                std::cerr << "suppress: --suppress is required\n";
                return 1;
            }
            const quiver::ExperimentConfig config = resolve_config(opts);
            quiver::run_experiment(config);
            std::cout << "wrote " << config.out << "\n";
        } else if (show->parsed()) {
            const quiver::ExperimentConfig config = resolve_config(opts);
            const quiver::StateVector psi = noiseless_output(config);
            std::cout << quiver::dirac_form(psi) << "\n\n"
                      << quiver::amplitude_table(psi);
        } else if (draw->parsed()) {
            const quiver::ExperimentConfig config = resolve_config(opts);
            std::cout << quiver::ascii_circuit(quiver::build_schedule(config),
                                               config.nq);
        }
    } catch (const std::invalid_argument& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "numerical failure: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
