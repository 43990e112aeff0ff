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

#include "quiver/multiverse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace quiver {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based substream: the sampled noise for a (step, path) slot never
// depends on how other slots are scheduled.
std::mt19937_64 substream(std::uint64_t seed, int step, int path) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ static_cast<std::uint64_t>(step));
    s = splitmix64(s ^ (static_cast<std::uint64_t>(path) << 32));
    return std::mt19937_64(s);
}

Channel draw_channel(const NoiseModel& model, std::mt19937_64& rng) {
    std::vector<Channel> pool(model.channels.begin(), model.channels.end());
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
}

NoiseHit draw_hit(const NoiseModel& model, int nq, std::mt19937_64& rng,
                  std::optional<int> exclude_qubit = std::nullopt) {
    std::uniform_int_distribution<int> qubit_pick(1, nq);
    int qubit = qubit_pick(rng);
    if (exclude_qubit && nq > 1) {
        while (qubit == *exclude_qubit) qubit = qubit_pick(rng);
    }
    NoiseHit hit;
    hit.qubit = qubit;
    hit.channel = draw_channel(model, rng);
    if (hit.channel == Channel::General) {
        std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
        std::uniform_real_distribution<double> cosine(-1.0, 1.0);
        hit.theta = angle(rng);
        const double z = cosine(rng);
        const double phi = angle(rng);
        const double r = std::sqrt(1.0 - z * z);
        hit.axis = {r * std::cos(phi), r * std::sin(phi), z};
    }
    return hit;
}

// rho -> G rho G^dagger for every hit of the event, in hit order.
Eigen::MatrixXcd conjugate_event(const NoiseEvent& event,
                                 const NoiseModel& model,
                                 const DensityMatrix& rho) {
    DensityMatrix out = rho;
    for (const NoiseHit& hit : event.hits) {
        out = conjugate_density(hit_gate(hit, model), {hit.qubit}, out);
    }
    return out.matrix();
}

Eigen::MatrixXcd dense_embed(const GateMatrix& gate, int qubit, int nq) {
    const Eigen::Index dim = Eigen::Index{1} << nq;
    const std::size_t st = stride(nq, qubit);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index n = 0; n < dim; ++n) {
        const int q = (static_cast<std::size_t>(n) & st) ? 1 : 0;
        const Eigen::Index base = n & ~static_cast<Eigen::Index>(st);
        m(base, n) = gate.at(0, q);
        m(base + static_cast<Eigen::Index>(st), n) = gate.at(1, q);
    }
    return m;
}

}  // namespace

std::string channel_name(Channel c) {
    switch (c) {
        case Channel::X: return "x";
        case Channel::Y: return "y";
        case Channel::Z: return "z";
        case Channel::General: return "general";
    }
    return "?";
}

void NoiseModel::validate() const {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("NoiseModel: p outside [0, 1]");
    if (p1 < 0.0 || p2 < 0.0 || std::abs(p1 + p2 - 1.0) > 1e-12) {
        throw std::invalid_argument("NoiseModel: p1 + p2 must equal 1");
    }
    if (paths < 1) throw std::invalid_argument("NoiseModel: paths must be >= 1");
    if (channels.empty() && epsilon() > 0.0) {
        throw std::invalid_argument("NoiseModel: no channels enabled");
    }
    for (Channel c : suppressed) {
        if (!channels.count(c)) {
            throw std::invalid_argument("NoiseModel: suppressed channel not enabled");
        }
    }
}

GateMatrix hit_gate(const NoiseHit& hit, const NoiseModel& model) {
    if (model.suppressed.count(hit.channel)) return pauli(0);
    switch (hit.channel) {
        case Channel::X: return pauli(1);
        case Channel::Y: return pauli(2);
        case Channel::Z: return pauli(3);
        case Channel::General: return rotation(hit.theta, hit.axis);
    }
    throw std::invalid_argument("hit_gate: unknown channel");
}

std::vector<NoiseEvent> sample_noise_operators(const NoiseModel& model,
                                               int nq, int step) {
    model.validate();
    if (model.noiseless()) return {};
    std::vector<NoiseEvent> events;
    events.reserve(2 * static_cast<std::size_t>(model.paths));
    for (int path = 0; path < model.paths; ++path) {
        std::mt19937_64 rng = substream(model.seed, step, path);
        NoiseEvent single{step, path, 1, {draw_hit(model, nq, rng)}};
        NoiseHit first = draw_hit(model, nq, rng);
        NoiseHit second = draw_hit(model, nq, rng, first.qubit);
        NoiseEvent twofold{step, path, 2, {first, second}};
        events.push_back(std::move(single));
        events.push_back(std::move(twofold));
    }
    return events;
}

DensityMatrix evolve_step(const DensityMatrix& rho_n,
                          const std::optional<AlgorithmOp>& algo,
                          const std::vector<NoiseEvent>& events,
                          const NoiseModel& model, int workers) {
    model.validate();
    DensityMatrix rho = rho_n;

    if (!events.empty()) {
        // Per-path branch pairs (s=1, s=2).
        std::vector<std::pair<const NoiseEvent*, const NoiseEvent*>> paths(
            model.paths, {nullptr, nullptr});
        for (const NoiseEvent& e : events) {
            if (e.path < 0 || e.path >= model.paths) {
                throw std::invalid_argument("evolve_step: event path out of range");
            }
            (e.branch == 1 ? paths[e.path].first : paths[e.path].second) = &e;
        }

        std::vector<Eigen::MatrixXcd> contributions(model.paths);
        auto work = [&](int begin, int end) {
            for (int k = begin; k < end; ++k) {
                Eigen::MatrixXcd sum =
                    Eigen::MatrixXcd::Zero(rho_n.dim(), rho_n.dim());
                if (paths[k].first) {
                    sum += model.p1 * conjugate_event(*paths[k].first, model, rho_n);
                }
                if (paths[k].second) {
                    sum += model.p2 * conjugate_event(*paths[k].second, model, rho_n);
                }
                contributions[k] = std::move(sum);
            }
        };
        if (workers <= 1 || model.paths == 1) {
            work(0, model.paths);
        } else {
            const int n = std::min(workers, model.paths);
            std::vector<std::thread> threads;
            const int chunk = (model.paths + n - 1) / n;
            for (int t = 0; t < n; ++t) {
                const int begin = t * chunk;
                const int end = std::min(model.paths, begin + chunk);
                if (begin < end) threads.emplace_back(work, begin, end);
            }
            for (std::thread& t : threads) t.join();
        }

        // Ordered reduction keeps the result independent of the worker count.
        Eigen::MatrixXcd accum = model.p * rho_n.matrix();
        const double scale = model.epsilon() / model.paths;
        for (const Eigen::MatrixXcd& c : contributions) accum += scale * c;
        rho = DensityMatrix(rho_n.num_qubits(), std::move(accum));
    }

    if (algo) {
        rho = conjugate_density(algo->gate, algo->qubits, rho);
    }
    rho.validate();
    return rho;
}

MultiverseResult run_multiverse(const StateVector& initial,
                                const Schedule& schedule,
                                const NoiseModel& model, int workers) {
    model.validate();
    const int nq = initial.num_qubits();
    for (const ScheduleStep& step : schedule) {
        if (step.op) {
            for (int q : step.op->qubits) {
                detail::check_qubit_index(nq, q, "run_multiverse");
            }
        }
    }

    // Freeze the whole event stream before evolving, so suppression reruns
    // compare against identical draws.
    std::vector<std::vector<NoiseEvent>> events(schedule.size());
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (schedule[i].noise && !model.noiseless()) {
            events[i] = sample_noise_operators(model, nq, static_cast<int>(i) + 1);
        }
    }

    const DensityMatrix rho0 = pure_density(initial);
    DensityMatrix rho = rho0;

    auto record = [&](int step_index) {
        MetricsRecord r;
        r.step = step_index;
        r.fidelity = fidelity(rho, rho0);
        r.purity = purity(rho);
        r.entropy = entropy(rho);
        r.eigenvalues = eigenvalues(rho);
        r.bloch = bloch_data(rho);
        return r;
    };

    MetricsTrace trace;
    trace.nq = nq;
    trace.records.push_back(record(0));
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        rho = evolve_step(rho, schedule[i].op, events[i], model, workers);
        trace.records.push_back(record(static_cast<int>(i) + 1));
    }
    return MultiverseResult{std::move(trace), std::move(rho)};
}

NoiseModel suppress_channel(const NoiseModel& model, Channel channel) {
    NoiseModel out = model;
    if (out.channels.count(channel)) out.suppressed.insert(channel);
    return out;
}

std::vector<KrausTerm> povm_decomposition(const NoiseModel& model, int nq,
                                          const std::vector<NoiseEvent>& events) {
    model.validate();
    const Eigen::Index dim = Eigen::Index{1} << nq;
    std::vector<KrausTerm> terms;
    terms.push_back({std::sqrt(model.p),
                     Eigen::MatrixXcd::Identity(dim, dim)});
    for (const NoiseEvent& e : events) {
        Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(dim, dim);
        for (const NoiseHit& hit : e.hits) {
            op = dense_embed(hit_gate(hit, model), hit.qubit, nq) * op;
        }
        const double ps = e.branch == 1 ? model.p1 : model.p2;
        terms.push_back({std::sqrt(model.epsilon() * ps / model.paths),
                         std::move(op)});
    }
    return terms;
}

}  // namespace quiver
