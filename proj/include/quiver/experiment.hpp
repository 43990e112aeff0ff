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

#pragma once

#include <string>
#include <vector>

#include "quiver/multiverse.hpp"

namespace quiver {

/// A runnable experiment: mv1 (H, noise, H, noise tail on one qubit),
/// mv2 (Bell then inverse Bell on two qubits), mvn (Hadamard plus CNOT
/// chain), or custom (pure storage under noise).
struct ExperimentConfig {
    std::string experiment = "mv1";
    int nq = 1;
    int steps = 12;
    NoiseModel model;
    std::vector<Channel> suppress;
    std::string format = "csv";
    std::string out = "trace.csv";
    int workers = 1;

    void validate() const;
};

/// Reads a flat key=value config file ('#' starts a comment).
ExperimentConfig parse_config(const std::string& path);

/// Parses "x,y,z,general" channel lists.
std::vector<Channel> parse_channels(const std::string& list);

/// The schedule the config describes. mv1 forces nq=1, mv2 nq=2, mvn
/// needs nq >= 2.
Schedule build_schedule(const ExperimentConfig& config);

/// Initial state of the experiment: |0...0>.
StateVector initial_state(const ExperimentConfig& config);

/// One data row per trace record (step 0 = initial state), full printed
/// precision.
std::string trace_to_csv(const MetricsTrace& trace);
std::string trace_to_json(const MetricsTrace& trace);

/// Builds the schedule, applies channel suppression, runs the multiverse
/// engine, and writes the trace to config.out in the requested format.
MultiverseResult run_experiment(const ExperimentConfig& config);

}  // namespace quiver
