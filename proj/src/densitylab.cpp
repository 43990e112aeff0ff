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

#include "quiver/densitylab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace quiver {

namespace {

constexpr double kTol = 1e-10;

const Eigen::Matrix2cd& sigma(int k) {
    static const std::array<Eigen::Matrix2cd, 4> mats = [] {
        std::array<Eigen::Matrix2cd, 4> s;
        const cx i{0.0, 1.0};
        s[0] << 1, 0, 0, 1;
        s[1] << 0, 1, 1, 0;
        s[2] << 0, -i, i, 0;
        s[3] << 1, 0, 0, -1;
        return s;
    }();
    return mats[k];
}

// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd herm_eigs(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m,
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

// Hermitian square root, with negative rounding noise clamped to zero.
// Throws when an eigenvalue is negative beyond rounding noise.
Eigen::MatrixXcd herm_sqrt(const Eigen::MatrixXcd& m, const char* who) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    Eigen::VectorXd eigs = solver.eigenvalues();
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
        if (eigs[i] < -1e-8) {
            throw std::runtime_error(std::string(who) + ": eigenvalue " +
                                     std::to_string(eigs[i]) + " < 0");
        }
        eigs[i] = std::sqrt(std::max(eigs[i], 0.0));
    }
    return solver.eigenvectors() * eigs.asDiagonal() *
           solver.eigenvectors().adjoint();
}

// Tr sqrt(sqrt(rho0) rho sqrt(rho0)) = sum of singular values of
// sqrt(rho) sqrt(rho0). The singular-value form is numerically stable:
// rounding noise enters the sum linearly instead of under a square root,
// which matters for the near-zero spectrum of low-rank inputs.
double fidelity_svd(const DensityMatrix& rho, const DensityMatrix& rho0,
                    const char* who) {
    if (rho.dim() != rho0.dim()) {
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
    }
    const Eigen::MatrixXcd product =
        herm_sqrt(rho.matrix(), who) * herm_sqrt(rho0.matrix(), who);
    return Eigen::BDCSVD<Eigen::MatrixXcd>(product).singularValues().sum();
}

}  // namespace

DensityMatrix::DensityMatrix(int nq, Eigen::MatrixXcd entries)
    : nq_(nq), m_(std::move(entries)) {
    if (nq_ < 1) throw std::invalid_argument("DensityMatrix: nq must be >= 1");
    const Eigen::Index d = Eigen::Index{1} << nq_;
    if (m_.rows() != d || m_.cols() != d) {
        throw std::invalid_argument("DensityMatrix: dimension mismatch");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kTol) {
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    if (std::abs(m_.trace() - cx{1.0, 0.0}) > kTol) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
}

void DensityMatrix::validate() const {
    const Eigen::VectorXd eigs = herm_eigs(m_);
    if (eigs.minCoeff() < -kTol || eigs.maxCoeff() > 1.0 + kTol) {
        throw std::runtime_error(
            "DensityMatrix: eigenvalue outside [0, 1]: min " +
            std::to_string(eigs.minCoeff()) + ", max " +
            std::to_string(eigs.maxCoeff()));
    }
}

DensityMatrix pure_density(const StateVector& psi) {
    const Eigen::Index d = static_cast<Eigen::Index>(psi.dim());
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            m(r, c) = psi.amp(r) * std::conj(psi.amp(c));
        }
    }
    return DensityMatrix(psi.num_qubits(), std::move(m));
}

DensityMatrix ensemble_average(const std::vector<double>& weights,
                               const std::vector<DensityMatrix>& rhos) {
    if (weights.empty() || weights.size() != rhos.size()) {
        throw std::invalid_argument("ensemble_average: size mismatch");
    }
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("ensemble_average: negative weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("ensemble_average: weights sum to " +
                                    std::to_string(total));
    }
    const int nq = rhos.front().num_qubits();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(rhos.front().dim(),
                                                  rhos.front().dim());
    for (std::size_t i = 0; i < rhos.size(); ++i) {
        if (rhos[i].num_qubits() != nq) {
            throw std::invalid_argument("ensemble_average: dimension mismatch");
        }
        sum += weights[i] * rhos[i].matrix();
    }
    return DensityMatrix(nq, std::move(sum));
}

double entropy(const DensityMatrix& rho) {
    const Eigen::VectorXd eigs = herm_eigs(rho.matrix());
    double s = 0.0;
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
        const double lam = std::clamp(eigs[i], 0.0, 1.0);
        if (lam > 0.0) s -= lam * std::log2(lam);
    }
    return s;
}

double purity(const DensityMatrix& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& rho0) {
    return fidelity_svd(rho, rho0, "fidelity");
}

double fidelity_approx(const DensityMatrix& rho, const DensityMatrix& rho0) {
    // The eigenvalues of rho.rho0 are the squared singular values of
    // sqrt(rho) sqrt(rho0), so sum_i sqrt(|eig_i(rho.rho0)|) reduces to the
    // same singular-value sum as the exact fidelity.
    return fidelity_svd(rho, rho0, "fidelity_approx");
}

std::vector<double> eigenvalues(const DensityMatrix& rho) {
    const Eigen::VectorXd eigs = herm_eigs(rho.matrix());
    std::vector<double> out(eigs.data(), eigs.data() + eigs.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
    const int nq = rho.num_qubits();
    if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        detail::check_qubit_index(nq, keep[i], "partial_trace");
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw std::invalid_argument("partial_trace: keep not increasing");
        }
    }
    const int nk = static_cast<int>(keep.size());
    std::vector<int> traced;
    for (int q = 1; q <= nq; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
            traced.push_back(q);
        }
    }
    // Compose a full index from the kept-subspace index a and the traced
    // assignment t, both read most-significant-qubit first.
    auto full_index = [&](std::size_t a, std::size_t t) {
        std::size_t n = 0;
        for (int i = 0; i < nk; ++i) {
            if ((a >> (nk - 1 - i)) & 1u) n |= stride(nq, keep[i]);
        }
        for (std::size_t i = 0; i < traced.size(); ++i) {
            if ((t >> (traced.size() - 1 - i)) & 1u) n |= stride(nq, traced[i]);
        }
        return n;
    };
    const Eigen::Index dk = Eigen::Index{1} << nk;
    const std::size_t dt = std::size_t{1} << traced.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
    for (Eigen::Index a = 0; a < dk; ++a) {
        for (Eigen::Index b = 0; b < dk; ++b) {
            cx sum{0.0, 0.0};
            for (std::size_t t = 0; t < dt; ++t) {
                sum += rho.matrix()(full_index(a, t), full_index(b, t));
            }
            out(a, b) = sum;
        }
    }
    return DensityMatrix(nk, std::move(out));
}

std::array<double, 3> bloch_vector(const DensityMatrix& rho, int qubit) {
    detail::check_qubit_index(rho.num_qubits(), qubit, "bloch_vector");
    const DensityMatrix one =
        rho.num_qubits() == 1 ? rho : partial_trace(rho, {qubit});
    std::array<double, 3> p{};
    for (int k = 1; k <= 3; ++k) {
        p[k - 1] = (sigma(k) * one.matrix()).trace().real();
    }
    return p;
}

Eigen::Matrix3d correlation_tensor(const DensityMatrix& rho, int q1, int q2) {
    const int nq = rho.num_qubits();
    detail::check_qubit_index(nq, q1, "correlation_tensor");
    detail::check_qubit_index(nq, q2, "correlation_tensor");
    if (q1 == q2) throw std::invalid_argument("correlation_tensor: equal qubits");
    const int qa = std::min(q1, q2);
    const int qb = std::max(q1, q2);
    const DensityMatrix pair =
        nq == 2 ? rho : partial_trace(rho, {qa, qb});
    Eigen::Matrix3d c;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            Eigen::Matrix4cd op = Eigen::Matrix4cd::Zero();
            // kron(sigma_i on qa, sigma_j on qb)
            for (int r = 0; r < 4; ++r) {
                for (int s = 0; s < 4; ++s) {
                    op(r, s) = sigma(i)(r >> 1, s >> 1) * sigma(j)(r & 1, s & 1);
                }
            }
            c(i - 1, j - 1) = (op * pair.matrix()).trace().real();
        }
    }
    return q1 < q2 ? c : Eigen::Matrix3d(c.transpose());
}

BlochData bloch_data(const DensityMatrix& rho) {
    BlochData data;
    const int nq = rho.num_qubits();
    for (int q = 1; q <= nq; ++q) {
        data.polarizations.push_back(bloch_vector(rho, q));
    }
    for (int a = 1; a <= nq; ++a) {
        for (int b = a + 1; b <= nq; ++b) {
            data.correlations.push_back(correlation_tensor(rho, a, b));
        }
    }
    return data;
}

}  // namespace quiver
