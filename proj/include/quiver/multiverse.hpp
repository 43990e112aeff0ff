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

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quiver/densitylab.hpp"
#include "quiver/gatekit.hpp"

namespace quiver {

enum class Channel { X = 1, Y = 2, Z = 3, General = 4 };

std::string channel_name(Channel c);

/// Noise-ensemble parameters: the ideal path keeps weight p, the noisy
/// remainder epsilon = 1 - p is split over np paths, each carrying a
/// single-hit branch (weight p1) and a double-hit branch (weight p2).
struct NoiseModel {
    double p = 0.8;
    double p1 = 0.95;
    double p2 = 0.05;
    int paths = 4;
    std::set<Channel> channels{Channel::X, Channel::Y, Channel::Z};
    std::set<Channel> suppressed;  // drawn but applied as identity
    std::uint64_t seed = 0;

    double epsilon() const { return 1.0 - p; }
    bool noiseless() const { return epsilon() == 0.0 || channels.empty(); }
    void validate() const;
};

/// One sampled one-qubit noise operator. theta/axis are only meaningful
/// for the General channel and are frozen at sampling time.
struct NoiseHit {
    int qubit;
    Channel channel;
    double theta = 0.0;
    std::array<double, 3> axis{0.0, 0.0, 1.0};
};

/// The frozen noise drawn for one (step, path, branch). branch 1 holds a
/// single hit, branch 2 two hits on distinct qubits.
struct NoiseEvent {
    int step;
    int path;
    int branch;
    std::vector<NoiseHit> hits;
};

/// A gate of the ideal algorithm, acting on the listed qubits.
struct AlgorithmOp {
    GateMatrix gate;
    std::vector<int> qubits;
    std::string label;  // used by the circuit renderer
};

/// One evolution step: an optional algorithm gate, with the noise
/// ensemble applied unless noise is off for this step.
struct ScheduleStep {
    std::optional<AlgorithmOp> op;
    bool noise = true;
};

using Schedule = std::vector<ScheduleStep>;

/// The metrics recorded after each step (and for the initial state).
struct MetricsRecord {
    int step;
    double fidelity;
    double purity;
    double entropy;
    std::vector<double> eigenvalues;
    BlochData bloch;
};

struct MetricsTrace {
    int nq;
    std::vector<MetricsRecord> records;  // step 0 = initial state
};

struct MultiverseResult {
    MetricsTrace trace;
    DensityMatrix final_rho;
};

/// A scaled Kraus operator of the one-step channel; the dense form is a
/// diagnostic representation for small systems.
struct KrausTerm {
    double weight;           // sqrt(p) or sqrt(epsilon * p_s / np)
    Eigen::MatrixXcd op;     // unscaled operator
};

/// Draws the per-path noise for one step: for every path, a branch-1
/// event (one hit) and a branch-2 event (two hits on distinct qubits).
/// Deterministic in (model.seed, step, path); an empty list for
/// noiseless models.
std::vector<NoiseEvent> sample_noise_operators(const NoiseModel& model,
                                               int nq, int step);

/// One step of the ensemble recurrence: the ideal path with weight p plus
/// the weighted per-path noise conjugations, then the algorithm gate
/// conjugation. Validates the output invariants.
DensityMatrix evolve_step(const DensityMatrix& rho_n,
                          const std::optional<AlgorithmOp>& algo,
                          const std::vector<NoiseEvent>& events,
                          const NoiseModel& model, int workers = 1);

/// Runs a whole schedule from a pure initial state. All noise events are
/// sampled up front and frozen, so channel-suppression reruns see the
/// identical event stream. Output is independent of the worker count.
MultiverseResult run_multiverse(const StateVector& initial,
                                const Schedule& schedule,
                                const NoiseModel& model, int workers = 1);

/// Copy of the model with one channel replaced by identity at apply time;
/// the event stream and RNG consumption are unchanged.
NoiseModel suppress_channel(const NoiseModel& model, Channel channel);

/// The Kraus form of one storage step: {sqrt(p) 1} plus the scaled
/// per-path noise operators of the given events.
std::vector<KrausTerm> povm_decomposition(const NoiseModel& model, int nq,
                                          const std::vector<NoiseEvent>& events);

/// The 2x2 matrix of a hit, honoring channel suppression.
GateMatrix hit_gate(const NoiseHit& hit, const NoiseModel& model);

}  // namespace quiver
