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

#include <random>
#include <utility>

#include "quiver/qstate.hpp"

namespace quiver {

/// Ancilla parity-measurement outcome: bits = (Z1Z2, Z2Z3) for the
/// bit-flip code, the Hadamard-conjugated parities for the phase-flip
/// code. (0,0) means no error detected; any other pattern names the
/// struck qubit.
struct Syndrome {
    int bit1;
    int bit2;
};

struct CorrectionResult {
    StateVector state;   // corrected 3-qubit code state
    Syndrome syndrome;
};

/// alpha|0> + beta|1>  ->  alpha|000> + beta|111> (two CNOTs from qubit 1).
StateVector encode_bitflip(const StateVector& psi);

/// Inverse of encode_bitflip: recovers the logical qubit from an
/// uncorrupted code state.
StateVector decode_bitflip(const StateVector& encoded);

/// Appends two ancillas, accumulates the Z1Z2 and Z2Z3 parities into them
/// with CNOTs, measures the ancillas, applies sigma_x to the implicated
/// qubit, and discards the ancillas.
CorrectionResult syndrome_and_correct_bitflip(const StateVector& psi,
                                              std::mt19937_64& rng);

/// The bit-flip construction conjugated by Hadamards on the three code
/// qubits; corrects one sigma_z error.
StateVector encode_phaseflip(const StateVector& psi);

StateVector decode_phaseflip(const StateVector& encoded);

CorrectionResult syndrome_and_correct_phaseflip(const StateVector& psi,
                                                std::mt19937_64& rng);

}  // namespace quiver
