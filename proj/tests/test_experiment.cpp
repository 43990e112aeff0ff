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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "quiver/experiment.hpp"

using namespace quiver;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

TEST_CASE("config parsing") {
    const std::string path = write_temp("quiver_cfg_ok.cfg",
                                        "experiment = mv2\n"
                                        "nq = 2\n"
                                        "steps = 10\n"
                                        "p = 0.8\n"
                                        "seed = 42   # reproducibility\n"
                                        "channels = x,z\n"
                                        "format = json\n");
    const ExperimentConfig config = parse_config(path);
    CHECK(config.experiment == "mv2");
    CHECK(config.steps == 10);
    CHECK(config.model.seed == 42);
    CHECK(config.model.channels ==
          std::set<Channel>{Channel::X, Channel::Z});
    CHECK(config.format == "json");
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse_config("/nonexistent/quiver.cfg"),
                    std::invalid_argument);

    const std::string no_seed = write_temp("quiver_cfg_noseed.cfg", "nq = 1\n");
    CHECK_THROWS_AS(parse_config(no_seed), std::invalid_argument);

    const std::string bad_key =
        write_temp("quiver_cfg_badkey.cfg", "seed = 1\nwhat = 2\n");
    CHECK_THROWS_AS(parse_config(bad_key), std::invalid_argument);

    ExperimentConfig config;
    config.experiment = "mv1";
    config.nq = 2;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.experiment = "nope";
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("schedule shapes") {
    ExperimentConfig mv1;
    mv1.experiment = "mv1";
    mv1.steps = 8;
    const Schedule s1 = build_schedule(mv1);
    CHECK(s1.size() == 8);
    CHECK(s1[0].op.has_value());
    CHECK_FALSE(s1[1].op.has_value());
    CHECK(s1[2].op.has_value());
    for (std::size_t i = 3; i < 8; ++i) CHECK_FALSE(s1[i].op.has_value());

    ExperimentConfig mvn;
    mvn.experiment = "mvn";
    mvn.nq = 5;
    mvn.steps = 12;
    const Schedule sn = build_schedule(mvn);
    CHECK(sn.size() == 12);
    CHECK(sn[0].op->label == "H");
    // CNOT chain 1->2 .. 1->5 with noise interludes in between
    int cnots = 0;
    for (const auto& step : sn) {
        if (step.op && step.op->label == "CNOT") ++cnots;
    }
    CHECK(cnots == 4);
}

TEST_CASE("trace files have one data row per record plus a header") {
    ExperimentConfig config;
    config.experiment = "mv1";
    config.steps = 6;
    config.model.seed = 5;
    config.out = "/tmp/quiver_trace_rows.csv";
    const MultiverseResult result = run_experiment(config);
    const auto rows = parse_csv(slurp(config.out));
    CHECK(rows.size() == result.trace.records.size() + 1);
    CHECK(rows.size() == build_schedule(config).size() + 2);  // header + step 0
    CHECK(rows[0][0] == "step");
    CHECK(rows[1][0] == "0");
    // columns: step,fidelity,purity,entropy,eig0,eig1, Px,Py,Pz for 1 qubit
    CHECK(rows[0].size() == 4 + 2 + 3);
    for (const auto& row : rows) CHECK(row.size() == rows[0].size());
}

TEST_CASE("csv and json exports agree numerically") {
    ExperimentConfig config;
    config.experiment = "mv2";
    config.nq = 2;
    config.steps = 8;
    config.model.seed = 11;
    config.out = "/tmp/quiver_trace_agree.csv";
    const MultiverseResult result = run_experiment(config);

    const auto rows = parse_csv(slurp(config.out));
    const nlohmann::json root = nlohmann::json::parse(trace_to_json(result.trace));
    REQUIRE(root["records"].size() == rows.size() - 1);
    for (std::size_t i = 0; i < root["records"].size(); ++i) {
        const auto& rec = root["records"][i];
        const auto& row = rows[i + 1];
        CHECK(std::stod(row[1]) == doctest::Approx(rec["fidelity"].get<double>())
                                       .epsilon(1e-15));
        CHECK(std::stod(row[2]) == doctest::Approx(rec["purity"].get<double>())
                                       .epsilon(1e-15));
        CHECK(std::stod(row[3]) == doctest::Approx(rec["entropy"].get<double>())
                                       .epsilon(1e-15));
    }
}

TEST_CASE("identical configs and seeds give byte-identical traces") {
    ExperimentConfig config;
    config.experiment = "mv2";
    config.nq = 2;
    config.steps = 12;
    config.model.seed = 33;
    config.out = "/tmp/quiver_trace_det_a.csv";
    run_experiment(config);
    const std::string a = slurp(config.out);

    config.out = "/tmp/quiver_trace_det_b.csv";
    run_experiment(config);
    CHECK(slurp(config.out) == a);

    config.out = "/tmp/quiver_trace_det_c.csv";
    config.workers = 4;
    run_experiment(config);
    CHECK(slurp(config.out) == a);
}

TEST_CASE("mv1 with every channel suppressed shows the noiseless dip and return") {
    ExperimentConfig config;
    config.experiment = "mv1";
    config.steps = 6;
    config.model.seed = 2;
    config.suppress = {Channel::X, Channel::Y, Channel::Z};
    config.out = "/tmp/quiver_trace_supp.csv";
    const MultiverseResult result = run_experiment(config);
    const auto& rec = result.trace.records;
    CHECK(rec[0].fidelity == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rec[1].fidelity ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(rec[3].fidelity == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rec.back().fidelity == doctest::Approx(1.0).epsilon(1e-9));
}
