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

#include "quiver/eccodes.hpp"

#include <stdexcept>
#include <string>

#include "quiver/gatekit.hpp"

namespace quiver {

namespace {

void require_qubits(const StateVector& psi, int nq, const char* what) {
    if (psi.num_qubits() != nq) {
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(nq) + "-qubit state");
    }
}

// Keeps the three code qubits of a 5-qubit state whose ancillas have
// collapsed to the measured bits.
StateVector drop_ancillas(const StateVector& full, int b1, int b2) {
    const std::size_t offset =
        static_cast<std::size_t>(b1) * 2 + static_cast<std::size_t>(b2);
    std::vector<cx> amps(8);
    for (std::size_t n = 0; n < 8; ++n) {
        amps[n] = full.amp(n * 4 + offset);
    }
    return StateVector(3, std::move(amps));
}

CorrectionResult correct_bitflip_impl(const StateVector& psi,
                                      std::mt19937_64& rng) {
    require_qubits(psi, 3, "syndrome_and_correct_bitflip");
    // Two ancillas accumulate the Z1Z2 and Z2Z3 parities.
    StateVector full = tensor_product(psi, basis_state(2, 0));
    const GateMatrix cx_gate = cnot();
    full = op2(cx_gate, 1, 4, full);
    full = op2(cx_gate, 2, 4, full);
    full = op2(cx_gate, 2, 5, full);
    full = op2(cx_gate, 3, 5, full);

    const MeasurementOutcome m1 = measure_qubit(full, 4, rng);
    const MeasurementOutcome m2 = measure_qubit(m1.collapsed, 5, rng);
    const Syndrome syndrome{m1.bit, m2.bit};

    StateVector code = drop_ancillas(m2.collapsed, m1.bit, m2.bit);
    // Syndrome -> struck qubit: (1,0) -> 1, (1,1) -> 2, (0,1) -> 3.
    if (syndrome.bit1 == 1 && syndrome.bit2 == 0) {
        code = op1(pauli(1), 1, code);
    } else if (syndrome.bit1 == 1 && syndrome.bit2 == 1) {
        code = op1(pauli(1), 2, code);
    } else if (syndrome.bit1 == 0 && syndrome.bit2 == 1) {
        code = op1(pauli(1), 3, code);
    }
    return CorrectionResult{std::move(code), syndrome};
}

}  // namespace

StateVector encode_bitflip(const StateVector& psi) {
    require_qubits(psi, 1, "encode_bitflip");
    StateVector code = tensor_product(psi, basis_state(2, 0));
    code = op2(cnot(), 1, 2, code);
    code = op2(cnot(), 1, 3, code);
    return code;
}

StateVector decode_bitflip(const StateVector& encoded) {
    require_qubits(encoded, 3, "decode_bitflip");
    StateVector code = op2(cnot(), 1, 3, encoded);
    code = op2(cnot(), 1, 2, code);
    // The logical qubit sits in |q_1 0 0>; anything elsewhere means the
    // input was outside the code space.
    return StateVector(1, {code.amp(0), code.amp(4)});
}

CorrectionResult syndrome_and_correct_bitflip(const StateVector& psi,
                                              std::mt19937_64& rng) {
    return correct_bitflip_impl(psi, rng);
}

StateVector encode_phaseflip(const StateVector& psi) {
    return omega_all(hadamard(), encode_bitflip(psi));
}

StateVector decode_phaseflip(const StateVector& encoded) {
    require_qubits(encoded, 3, "decode_phaseflip");
    return decode_bitflip(omega_all(hadamard(), encoded));
}

CorrectionResult syndrome_and_correct_phaseflip(const StateVector& psi,
                                                std::mt19937_64& rng) {
    require_qubits(psi, 3, "syndrome_and_correct_phaseflip");
    // Hadamards map sigma_z errors onto the bit-flip construction.
    CorrectionResult result =
        correct_bitflip_impl(omega_all(hadamard(), psi), rng);
    result.state = omega_all(hadamard(), result.state);
    return result;
}

}  // namespace quiver
