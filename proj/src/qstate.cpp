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

#include "quiver/qstate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace quiver {

namespace {
constexpr double kNormTol = 1e-10;
}

namespace detail {
void check_qubit_index(int nq, int is, const char* what) {
    if (is < 1 || is > nq) {
        throw std::out_of_range(std::string(what) + ": qubit index " +
                                std::to_string(is) + " outside [1, " +
                                std::to_string(nq) + "]");
    }
}
}  // namespace detail

StateVector::StateVector(int nq, std::vector<cx> amps)
    : nq_(nq), amps_(std::move(amps)) {
    if (nq_ < 1) throw std::invalid_argument("StateVector: nq must be >= 1");
    if (amps_.size() != (std::size_t{1} << nq_)) {
        throw std::invalid_argument("StateVector: amplitude count " +
                                    std::to_string(amps_.size()) +
                                    " != 2^" + std::to_string(nq_));
    }
    check_normalized();
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cx& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::check_normalized() const {
    if (std::abs(norm() - 1.0) > kNormTol) {
        throw std::invalid_argument("StateVector: norm " +
                                    std::to_string(norm()) + " is not 1");
    }
}

StateVector unchecked_state(int nq, std::vector<cx> amps) {
    return StateVector(nq, std::move(amps), StateVector::unchecked_t{});
}

StateVector basis_state(int nq, std::size_t n) {
    if (nq < 1) throw std::invalid_argument("basis_state: nq must be >= 1");
    const std::size_t dim = std::size_t{1} << nq;
    if (n >= dim) {
        throw std::out_of_range("basis_state: index " + std::to_string(n) +
                                " >= 2^" + std::to_string(nq));
    }
    std::vector<cx> amps(dim, cx{0.0, 0.0});
    amps[n] = cx{1.0, 0.0};
    return StateVector(nq, std::move(amps));
}

QubitLabel decimal_to_bits(std::size_t n, int nq) {
    if (nq < 1) throw std::invalid_argument("decimal_to_bits: nq must be >= 1");
    if (n >= (std::size_t{1} << nq)) {
        throw std::out_of_range("decimal_to_bits: index out of range");
    }
    QubitLabel bits(nq);
    for (int i = 0; i < nq; ++i) {
        bits[i] = static_cast<int>((n >> (nq - 1 - i)) & 1u);
    }
    return bits;
}

std::size_t bits_to_decimal(const QubitLabel& label) {
    std::size_t n = 0;
    for (int b : label) {
        if (b != 0 && b != 1) {
            throw std::invalid_argument("bits_to_decimal: bit value " +
                                        std::to_string(b));
        }
        n = (n << 1) | static_cast<std::size_t>(b);
    }
    return n;
}

std::size_t stride(int nq, int is) {
    detail::check_qubit_index(nq, is, "stride");
    return std::size_t{1} << (nq - is);
}

std::vector<std::array<std::size_t, 2>> pick1(int nq, int is) {
    const std::size_t st = stride(nq, is);
    const std::size_t dim = std::size_t{1} << nq;
    std::vector<std::array<std::size_t, 2>> pairs;
    pairs.reserve(dim / 2);
    for (std::size_t block = 0; block < dim; block += 2 * st) {
        for (std::size_t n0 = block; n0 < block + st; ++n0) {
            pairs.push_back({n0, n0 + st});
        }
    }
    return pairs;
}

std::vector<std::array<std::size_t, 4>> pick2(int nq, int is1, int is2) {
    if (is1 == is2) throw std::invalid_argument("pick2: qubit indices equal");
    const std::size_t s1 = stride(nq, is1);
    const std::size_t s2 = stride(nq, is2);
    const std::size_t dim = std::size_t{1} << nq;
    std::vector<std::array<std::size_t, 4>> quartets;
    quartets.reserve(dim / 4);
    for (std::size_t n = 0; n < dim; ++n) {
        if ((n & s1) == 0 && (n & s2) == 0) {
            quartets.push_back({n, n + s2, n + s1, n + s1 + s2});
        }
    }
    return quartets;
}

std::vector<std::array<std::size_t, 8>> pick3(int nq, int is1, int is2,
                                              int is3) {
    if (is1 == is2 || is1 == is3 || is2 == is3) {
        throw std::invalid_argument("pick3: duplicate qubit index");
    }
    const std::size_t s1 = stride(nq, is1);
    const std::size_t s2 = stride(nq, is2);
    const std::size_t s3 = stride(nq, is3);
    const std::size_t dim = std::size_t{1} << nq;
    std::vector<std::array<std::size_t, 8>> octets;
    octets.reserve(dim / 8);
    for (std::size_t n = 0; n < dim; ++n) {
        if ((n & s1) == 0 && (n & s2) == 0 && (n & s3) == 0) {
            octets.push_back({n, n + s3, n + s2, n + s2 + s3, n + s1,
                              n + s1 + s3, n + s1 + s2, n + s1 + s2 + s3});
        }
    }
    return octets;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    const std::size_t db = b.dim();
    std::vector<cx> amps(a.dim() * db);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < db; ++j) {
            amps[i * db + j] = a.amp(i) * b.amp(j);
        }
    }
    return StateVector(a.num_qubits() + b.num_qubits(), std::move(amps));
}

MeasurementOutcome measure_qubit(const StateVector& psi, int is,
                                 std::mt19937_64& rng) {
    const int nq = psi.num_qubits();
    detail::check_qubit_index(nq, is, "measure_qubit");
    const std::size_t st = stride(nq, is);

    double p1 = 0.0;
    for (std::size_t n = 0; n < psi.dim(); ++n) {
        if (n & st) p1 += std::norm(psi.amp(n));
    }
    const double p0 = 1.0 - p1;

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int bit = unit(rng) < p0 ? 0 : 1;
    const double pbit = bit == 0 ? p0 : p1;

    const double scale = 1.0 / std::sqrt(pbit);
    std::vector<cx> amps(psi.dim(), cx{0.0, 0.0});
    for (std::size_t n = 0; n < psi.dim(); ++n) {
        const int qn = (n & st) ? 1 : 0;
        if (qn == bit) amps[n] = psi.amp(n) * scale;
    }
    return MeasurementOutcome{bit, pbit, StateVector(nq, std::move(amps))};
}

}  // namespace quiver
