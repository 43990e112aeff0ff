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
#include <sstream>

#include "quiver/display.hpp"
#include "quiver/gatekit.hpp"

using namespace quiver;

TEST_CASE("dirac_form") {
    CHECK(dirac_form(basis_state(3, 0)) == "1.0000|000>");

    const double r = 1.0 / std::sqrt(2.0);
    CHECK(dirac_form(StateVector(2, {r, 0, 0, r})) ==
          "0.70711|00> + 0.70711|11>");

    const std::string uniform = dirac_form(omega_all(hadamard(), basis_state(3, 0)));
    // eight terms, each 1/sqrt(8)
    std::size_t count = 0, pos = 0;
    while ((pos = uniform.find("0.35355", pos)) != std::string::npos) {
        ++count;
        pos += 1;
    }
    CHECK(count == 8);

    CHECK(dirac_form(StateVector(1, {r, -r})) == "0.70711|0> - 0.70711|1>");
}

TEST_CASE("amplitude_table rows") {
    const std::string one = amplitude_table(basis_state(1, 1));
    CHECK(one.find("1\t1\t1\t0\n") != std::string::npos);

    const double r = 1.0 / std::sqrt(2.0);
    const std::string minus = amplitude_table(StateVector(1, {r, -r}));
    CHECK(minus.find("0\t0\t0.707107\t0\n") != std::string::npos);
    CHECK(minus.find("1\t1\t0.707107\t3.14159\n") != std::string::npos);

    const cx phase = std::polar(1.0, M_PI / 2.0);
    const std::string imag = amplitude_table(StateVector(1, {phase, 0.0}));
    CHECK(imag.find("1.5708") != std::string::npos);
}

TEST_CASE("dirac_form output can be re-parsed into the state") {
    const double r = 1.0 / std::sqrt(2.0);
    const StateVector psi(2, {r, 0, 0, r});
    const std::string text = dirac_form(psi);

    // parse "coef|bits>" terms back
    std::istringstream in(text);
    std::string token;
    std::vector<cx> amps(4, cx{0.0, 0.0});
    double sign = 1.0;
    while (in >> token) {
        if (token == "+") { sign = 1.0; continue; }
        if (token == "-") { sign = -1.0; continue; }
        const auto bar = token.find('|');
        REQUIRE(bar != std::string::npos);
        const double coef = std::stod(token.substr(0, bar));
        const std::string bits = token.substr(bar + 1, token.size() - bar - 2);
        amps[bits_to_decimal({bits[0] - '0', bits[1] - '0'})] = sign * coef;
    }
    for (std::size_t n = 0; n < 4; ++n) {
        CHECK(std::abs(amps[n] - psi.amp(n)) < 1e-5);
    }
}

TEST_CASE("ascii_circuit layout") {
    const AlgorithmOp h{hadamard(), {1}, "H"};
    const AlgorithmOp cx12{cnot(), {1, 2}, "CNOT"};
    Schedule mv2{{h, true}, {std::nullopt, true}, {cx12, true},
                 {cx12, true}, {h, true}};
    const std::string art = ascii_circuit(mv2, 2);

    std::istringstream in(art);
    std::string wire1, wire2;
    std::getline(in, wire1);
    std::getline(in, wire2);
    CHECK(wire1.find("H") != std::string::npos);
    CHECK(wire1.find("●") != std::string::npos);
    CHECK(wire2.find("⊕") != std::string::npos);
    CHECK(wire1.find("N") != std::string::npos);
    CHECK(wire2.find("N") != std::string::npos);

    // empty schedule: bare wires
    const std::string bare = ascii_circuit({}, 2);
    CHECK(bare == "q1: \nq2: \n");

    // Toffoli: two controls, one target
    const AlgorithmOp ccx{toffoli(), {1, 2, 3}, "CCX"};
    const std::string three = ascii_circuit({{ccx, false}}, 3);
    std::istringstream in3(three);
    std::string w1, w2, w3;
    std::getline(in3, w1);
    std::getline(in3, w2);
    std::getline(in3, w3);
    CHECK(w1.find("●") != std::string::npos);
    CHECK(w2.find("●") != std::string::npos);
    CHECK(w3.find("⊕") != std::string::npos);
}
