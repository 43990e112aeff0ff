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
#include <random>
#include <vector>

#include "quiver/densitylab.hpp"
#include "quiver/qstate.hpp"

namespace quiver {

/// A small 2^arity x 2^arity operator matrix applied to each amplitude
/// pair/quartet/octet instead of a full 2^nq x 2^nq operator. Rows and
/// columns are ordered by the bit pattern of the acted-on qubits, in the
/// order the qubit arguments are given to op1/op2/op3.
class GateMatrix {
public:
    GateMatrix(int arity, std::vector<cx> row_major);

    int arity() const { return arity_; }
    int dim() const { return 1 << arity_; }
    cx at(int r, int c) const { return m_[static_cast<std::size_t>(r) * dim() + c]; }
    const std::vector<cx>& entries() const { return m_; }

    bool is_unitary(double tol = 1e-12) const;
    GateMatrix adjoint() const;
    GateMatrix operator*(const GateMatrix& other) const;

private:
    int arity_;
    std::vector<cx> m_;
};

/// Pauli matrix sigma_k; k = 0 is the 2x2 identity, (1,2,3) = (x,y,z).
GateMatrix pauli(int k);

/// (sigma_x + sigma_z)/sqrt(2); self-inverse.
GateMatrix hadamard();

/// Controlled NOT; the first qubit argument of op2 is the control.
GateMatrix cnot();

/// Phase e^{i theta} on |11>; control is the first qubit argument.
GateMatrix controlled_phase(double theta);

/// Doubly controlled NOT on the third qubit argument.
GateMatrix toffoli();

/// exp(-i theta/2 axis.sigma) for a unit axis.
GateMatrix rotation(double theta, const std::array<double, 3>& axis);

/// Random single-qubit unitary: theta uniform on [0, 2pi), axis uniform
/// on the sphere.
GateMatrix random_rotation(std::mt19937_64& rng);

/// One-qubit operator applied to qubit is via the 2x2 kernel over every
/// partner pair; never builds a 2^nq x 2^nq matrix.
StateVector op1(const GateMatrix& gate, int is, const StateVector& psi);

/// Two-qubit operator applied via the 4x4 kernel over every quartet.
StateVector op2(const GateMatrix& gate, int is1, int is2,
                const StateVector& psi);

/// Three-qubit operator applied via the 8x8 kernel over every octet.
StateVector op3(const GateMatrix& gate, int is1, int is2, int is3,
                const StateVector& psi);

/// The same one-qubit gate applied to every qubit in turn.
StateVector omega_all(const GateMatrix& gate, const StateVector& psi);

/// Gate conjugation rho -> Omega rho Omega^dagger, computed by running the
/// strided kernel over the columns of rho and of its adjoint.
DensityMatrix conjugate_density(const GateMatrix& gate,
                                const std::vector<int>& qubits,
                                const DensityMatrix& rho);

namespace detail {
/// In-place kernel application on a raw amplitude span of length 2^nq.
/// Shared by the state-vector ops and the density-matrix conjugation.
void apply_kernel(const GateMatrix& gate, const std::vector<int>& qubits,
                  int nq, cx* amps);
}

}  // namespace quiver
