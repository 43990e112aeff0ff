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

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "quiver/qstate.hpp"

namespace quiver {

/// Hermitian, trace-one density matrix over nq qubits.
class DensityMatrix {
public:
    DensityMatrix(int nq, Eigen::MatrixXcd entries);

    int num_qubits() const { return nq_; }
    Eigen::Index dim() const { return m_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return m_; }

    /// Hermiticity, unit trace, and eigenvalue-range checks (tolerance
    /// 1e-10); throws on violation.
    void validate() const;

private:
    int nq_;
    Eigen::MatrixXcd m_;
};

/// Per-qubit polarization vectors and per-pair spin correlation tensors.
struct BlochData {
    std::vector<std::array<double, 3>> polarizations;   // one per qubit
    std::vector<Eigen::Matrix3d> correlations;          // one per (i<j) pair
};

/// rho = |psi><psi|.
DensityMatrix pure_density(const StateVector& psi);

/// Weighted mixture sum_i w_i rho_i. Weights must be nonnegative and sum
/// to one within 1e-12.
DensityMatrix ensemble_average(const std::vector<double>& weights,
                               const std::vector<DensityMatrix>& rhos);

/// Von Neumann entropy -sum lambda_i log2 lambda_i, in qubits of entropy,
/// so a maximally mixed nq-qubit state scores exactly nq.
double entropy(const DensityMatrix& rho);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// Uhlmann fidelity Tr sqrt(sqrt(rho0) rho sqrt(rho0)).
double fidelity(const DensityMatrix& rho, const DensityMatrix& rho0);

/// Approximate fidelity sum_i sqrt(|eig_i(rho rho0)|); exact whenever
/// rho0 is pure.
double fidelity_approx(const DensityMatrix& rho, const DensityMatrix& rho0);

/// Real eigenvalues of rho in descending order.
std::vector<double> eigenvalues(const DensityMatrix& rho);

/// Polarization P = Tr[sigma rho_q] of one qubit (reduced via partial
/// trace when nq > 1). Components ordered (x, y, z).
std::array<double, 3> bloch_vector(const DensityMatrix& rho, int qubit);

/// Spin correlation tensor C_ij = Tr[(sigma_i on q1)(sigma_j on q2) rho].
Eigen::Matrix3d correlation_tensor(const DensityMatrix& rho, int q1, int q2);

/// Reduced density matrix over the kept qubits (1-based, strictly
/// increasing).
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

/// All single-qubit polarizations and pairwise correlations of rho.
BlochData bloch_data(const DensityMatrix& rho);

}  // namespace quiver
