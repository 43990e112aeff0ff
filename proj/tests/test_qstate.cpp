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
#include <set>

#include "oracle.hpp"
#include "quiver/qstate.hpp"

using namespace quiver;

TEST_CASE("basis_state puts a single unit amplitude at the index") {
    const StateVector s = basis_state(3, 0);
    CHECK(s.amp(0) == cx{1.0, 0.0});
    for (std::size_t n = 1; n < 8; ++n) CHECK(s.amp(n) == cx{0.0, 0.0});

    const StateVector t = basis_state(2, 3);
    CHECK(t.amp(3) == cx{1.0, 0.0});
    CHECK(t.amp(0) == cx{0.0, 0.0});

    const StateVector one = basis_state(1, 1);
    CHECK(one.amp(0) == cx{0.0, 0.0});
    CHECK(one.amp(1) == cx{1.0, 0.0});

    CHECK_THROWS_AS(basis_state(2, 4), std::out_of_range);
}

TEST_CASE("decimal/binary label conversion") {
    CHECK(decimal_to_bits(6, 3) == QubitLabel{1, 1, 0});
    CHECK(decimal_to_bits(0, 4) == QubitLabel{0, 0, 0, 0});
    CHECK(decimal_to_bits(5, 3) == QubitLabel{1, 0, 1});

    CHECK(bits_to_decimal({1, 0, 1}) == 5);
    CHECK(bits_to_decimal({0, 0, 0}) == 0);
    CHECK(bits_to_decimal({1, 1, 1}) == 7);

    CHECK_THROWS_AS(decimal_to_bits(8, 3), std::out_of_range);
    CHECK_THROWS_AS(bits_to_decimal({0, 2}), std::invalid_argument);
}

TEST_CASE("label round trip is exhaustive up to 10 qubits") {
    for (int nq = 1; nq <= 10; ++nq) {
        for (std::size_t n = 0; n < (std::size_t{1} << nq); ++n) {
            CHECK(bits_to_decimal(decimal_to_bits(n, nq)) == n);
        }
    }
}

TEST_CASE("stride") {
    CHECK(stride(3, 1) == 4);
    CHECK(stride(3, 3) == 1);
    CHECK(stride(5, 2) == 8);
    CHECK_THROWS_AS(stride(3, 0), std::out_of_range);
    CHECK_THROWS_AS(stride(3, 4), std::out_of_range);
}

TEST_CASE("pick1 enumerates partner pairs") {
    using Pairs = std::vector<std::array<std::size_t, 2>>;
    CHECK(pick1(3, 1) == Pairs{{0, 4}, {1, 5}, {2, 6}, {3, 7}});
    CHECK(pick1(1, 1) == Pairs{{0, 1}});
    CHECK(pick1(3, 3) == Pairs{{0, 1}, {2, 3}, {4, 5}, {6, 7}});
}

TEST_CASE("pick2 enumerates quartets") {
    using Quads = std::vector<std::array<std::size_t, 4>>;
    CHECK(pick2(3, 1, 2) == Quads{{0, 2, 4, 6}, {1, 3, 5, 7}});
    CHECK(pick2(2, 1, 2) == Quads{{0, 1, 2, 3}});
    CHECK(pick2(3, 2, 3) == Quads{{0, 1, 2, 3}, {4, 5, 6, 7}});
    CHECK_THROWS_AS(pick2(3, 2, 2), std::invalid_argument);
}

TEST_CASE("pick3 enumerates octets") {
    using Octs = std::vector<std::array<std::size_t, 8>>;
    CHECK(pick3(3, 1, 2, 3) == Octs{{0, 1, 2, 3, 4, 5, 6, 7}});
    CHECK(pick3(4, 1, 2, 3) ==
          Octs{{0, 2, 4, 6, 8, 10, 12, 14}, {1, 3, 5, 7, 9, 11, 13, 15}});
    CHECK(pick3(4, 2, 3, 4) ==
          Octs{{0, 1, 2, 3, 4, 5, 6, 7}, {8, 9, 10, 11, 12, 13, 14, 15}});
    CHECK_THROWS_AS(pick3(4, 1, 2, 1), std::invalid_argument);
}

TEST_CASE("pick outputs partition the index space for every qubit choice") {
    for (int nq = 1; nq <= 8; ++nq) {
        const std::size_t dim = std::size_t{1} << nq;
        for (int i = 1; i <= nq; ++i) {
            std::set<std::size_t> seen;
            for (const auto& pr : pick1(nq, i)) {
                CHECK(pr[1] == pr[0] + stride(nq, i));
                seen.insert(pr.begin(), pr.end());
            }
            CHECK(seen.size() == dim);
            for (int j = 1; j <= nq; ++j) {
                if (j == i) continue;
                std::set<std::size_t> seen2;
                for (const auto& q : pick2(nq, i, j)) {
                    seen2.insert(q.begin(), q.end());
                }
                CHECK(seen2.size() == dim);
                for (int k = 1; k <= nq; ++k) {
                    if (k == i || k == j) continue;
                    std::set<std::size_t> seen3;
                    for (const auto& o : pick3(nq, i, j, k)) {
                        seen3.insert(o.begin(), o.end());
                    }
                    CHECK(seen3.size() == dim);
                }
            }
        }
    }
}

TEST_CASE("tensor product") {
    const StateVector zero = basis_state(1, 0);
    const StateVector one = basis_state(1, 1);

    const StateVector zz = tensor_product(zero, zero);
    CHECK(zz.amp(0) == cx{1.0, 0.0});

    const StateVector oz = tensor_product(one, zero);
    CHECK(oz.amp(2) == cx{1.0, 0.0});

    const double r = 1.0 / std::sqrt(2.0);
    const StateVector plus(1, {r, r});
    const StateVector mixed = tensor_product(plus, one);
    CHECK(std::abs(mixed.amp(1) - cx{r, 0.0}) < 1e-12);
    CHECK(std::abs(mixed.amp(3) - cx{r, 0.0}) < 1e-12);
    CHECK(std::abs(mixed.amp(0)) < 1e-12);
    CHECK(std::abs(mixed.amp(2)) < 1e-12);
}

TEST_CASE("tensor product preserves normalization for random states") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector a = testing::random_state(2, rng);
        const StateVector b = testing::random_state(3, rng);
        CHECK(std::abs(tensor_product(a, b).norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("measurement of definite states is deterministic") {
    std::mt19937_64 rng(1);
    const MeasurementOutcome m = measure_qubit(basis_state(2, 2), 1, rng);
    CHECK(m.bit == 1);
    CHECK(m.probability == doctest::Approx(1.0));
    CHECK(std::abs(m.collapsed.amp(2) - cx{1.0, 0.0}) < 1e-12);
}

TEST_CASE("measuring a Bell state collapses to the matching branch") {
    std::mt19937_64 rng(2);
    const double r = 1.0 / std::sqrt(2.0);
    const StateVector bell(2, {r, 0, 0, r});
    for (int trial = 0; trial < 50; ++trial) {
        const MeasurementOutcome m = measure_qubit(bell, 1, rng);
        CHECK(m.probability == doctest::Approx(0.5));
        const std::size_t expect = m.bit == 0 ? 0 : 3;
        CHECK(std::abs(m.collapsed.amp(expect) - cx{1.0, 0.0}) < 1e-12);
    }
}

TEST_CASE("measurement frequencies match Born probabilities within 3 sigma") {
    std::mt19937_64 rng(3);
    const StateVector psi(2, {std::sqrt(0.36), std::sqrt(0.64), 0, 0});
    const int samples = 100000;
    int ones = 0;
    for (int i = 0; i < samples; ++i) {
        const MeasurementOutcome m = measure_qubit(psi, 2, rng);
        if (m.bit == 1) {
            ++ones;
            CHECK(m.probability == doctest::Approx(0.64));
        }
    }
    const double expected = 0.64 * samples;
    const double sigma = std::sqrt(samples * 0.64 * 0.36);
    CHECK(std::abs(ones - expected) < 3.0 * sigma);
}

TEST_CASE("state construction rejects bad inputs") {
    CHECK_THROWS_AS(StateVector(2, std::vector<cx>(3)), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(1, {cx{0.5, 0.0}, cx{0.5, 0.0}}),
                    std::invalid_argument);
}
