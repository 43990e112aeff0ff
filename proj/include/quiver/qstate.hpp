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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace quiver {

using cx = std::complex<double>;

/// Qubit values q_1 ... q_nq, most significant first.
using QubitLabel = std::vector<int>;

/// An n-qubit state as 2^nq complex amplitudes, indexed by the decimal
/// equivalent of the qubit bit string (q_1 most significant).
class StateVector {
public:
    StateVector(int nq, std::vector<cx> amps);

    int num_qubits() const { return nq_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cx>& amps() const { return amps_; }
    cx amp(std::size_t n) const { return amps_[n]; }
    double norm() const;

    /// Validates the unit-norm invariant (tolerance 1e-10); throws on failure.
    void check_normalized() const;

private:
    struct unchecked_t {};
    StateVector(int nq, std::vector<cx> amps, unchecked_t)
        : nq_(nq), amps_(std::move(amps)) {}

    int nq_;
    std::vector<cx> amps_;

    friend StateVector unchecked_state(int nq, std::vector<cx> amps);
};

/// Internal constructor that skips normalization checks. Used by gate
/// kernels whose unitarity already guarantees the invariant.
StateVector unchecked_state(int nq, std::vector<cx> amps);

struct MeasurementOutcome {
    int bit;                 // measured value, 0 or 1
    double probability;      // Born probability of that value
    StateVector collapsed;   // renormalized post-measurement state
};

/// |n> in the 2^nq-dimensional computational basis.
StateVector basis_state(int nq, std::size_t n);

/// Decimal index -> bit string (q_1 most significant).
QubitLabel decimal_to_bits(std::size_t n, int nq);

/// Bit string -> decimal index. Inverse of decimal_to_bits.
std::size_t bits_to_decimal(const QubitLabel& label);

/// The decimal step 2^(nq-is) between partner states differing only in
/// qubit is.
std::size_t stride(int nq, int is);

/// All (n0, n1) index pairs coupled by a one-qubit operator on qubit is:
/// n0 has q_is = 0 and n1 = n0 + stride. The pairs partition [0, 2^nq).
std::vector<std::array<std::size_t, 2>> pick1(int nq, int is);

/// All (n00, n01, n10, n11) quartets coupled by a two-qubit operator on
/// qubits (is1, is2); ordered by the (q_is1, q_is2) bit pattern.
std::vector<std::array<std::size_t, 4>> pick2(int nq, int is1, int is2);

/// All octets coupled by a three-qubit operator, ordered by the
/// (q_is1, q_is2, q_is3) bit pattern 000..111.
std::vector<std::array<std::size_t, 8>> pick3(int nq, int is1, int is2, int is3);

/// Kronecker product |a> (x) |b>, a's qubits most significant.
StateVector tensor_product(const StateVector& a, const StateVector& b);

/// Projective measurement of qubit is in the computational basis.
/// Samples the outcome with Born probability, zeroes the discarded branch
/// and renormalizes.
MeasurementOutcome measure_qubit(const StateVector& psi, int is,
                                 std::mt19937_64& rng);

namespace detail {
void check_qubit_index(int nq, int is, const char* what);
}

}  // namespace quiver
