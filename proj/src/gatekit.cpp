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

#include "quiver/gatekit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace quiver {

namespace {

void check_arity(const GateMatrix& gate, int expected, const char* what) {
    if (gate.arity() != expected) {
        throw std::invalid_argument(std::string(what) + ": expected arity " +
                                    std::to_string(expected) + ", got " +
                                    std::to_string(gate.arity()));
    }
}

void check_distinct(const std::vector<int>& qubits, const char* what) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        for (std::size_t j = i + 1; j < qubits.size(); ++j) {
            if (qubits[i] == qubits[j]) {
                throw std::invalid_argument(std::string(what) +
                                            ": duplicate qubit index");
            }
        }
    }
}

}  // namespace

GateMatrix::GateMatrix(int arity, std::vector<cx> row_major)
    : arity_(arity), m_(std::move(row_major)) {
    if (arity_ < 1 || arity_ > 3) {
        throw std::invalid_argument("GateMatrix: arity must be 1, 2, or 3");
    }
    const std::size_t d = std::size_t{1} << arity_;
    if (m_.size() != d * d) {
        throw std::invalid_argument("GateMatrix: entry count mismatch");
    }
}

bool GateMatrix::is_unitary(double tol) const {
    const int d = dim();
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            cx sum{0.0, 0.0};
            for (int k = 0; k < d; ++k) {
                sum += at(r, k) * std::conj(at(c, k));
            }
            const cx expected = r == c ? cx{1.0, 0.0} : cx{0.0, 0.0};
            if (std::abs(sum - expected) > tol) return false;
        }
    }
    return true;
}

GateMatrix GateMatrix::adjoint() const {
    const int d = dim();
    std::vector<cx> out(m_.size());
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            out[static_cast<std::size_t>(r) * d + c] = std::conj(at(c, r));
        }
    }
    return GateMatrix(arity_, std::move(out));
}

GateMatrix GateMatrix::operator*(const GateMatrix& other) const {
    if (other.arity_ != arity_) {
        throw std::invalid_argument("GateMatrix: arity mismatch in product");
    }
    const int d = dim();
    std::vector<cx> out(m_.size(), cx{0.0, 0.0});
    for (int r = 0; r < d; ++r) {
        for (int k = 0; k < d; ++k) {
            const cx a = at(r, k);
            for (int c = 0; c < d; ++c) {
                out[static_cast<std::size_t>(r) * d + c] += a * other.at(k, c);
            }
        }
    }
    return GateMatrix(arity_, std::move(out));
}

GateMatrix pauli(int k) {
    const cx i{0.0, 1.0};
    switch (k) {
        case 0: return GateMatrix(1, {1, 0, 0, 1});
        case 1: return GateMatrix(1, {0, 1, 1, 0});
        case 2: return GateMatrix(1, {0, -i, i, 0});
        case 3: return GateMatrix(1, {1, 0, 0, -1});
        default:
            throw std::invalid_argument("pauli: component must be 0..3");
    }
}

GateMatrix hadamard() {
    const double r = 1.0 / std::numbers::sqrt2;
    return GateMatrix(1, {r, r, r, -r});
}

GateMatrix cnot() {
    return GateMatrix(2, {1, 0, 0, 0,
                          0, 1, 0, 0,
                          0, 0, 0, 1,
                          0, 0, 1, 0});
}

GateMatrix controlled_phase(double theta) {
    return GateMatrix(2, {1, 0, 0, 0,
                          0, 1, 0, 0,
                          0, 0, 1, 0,
                          0, 0, 0, std::polar(1.0, theta)});
}

GateMatrix toffoli() {
    std::vector<cx> m(64, cx{0.0, 0.0});
    for (int n = 0; n < 8; ++n) {
        const int target = n >= 6 ? (n == 6 ? 7 : 6) : n;
        m[static_cast<std::size_t>(target) * 8 + n] = cx{1.0, 0.0};
    }
    return GateMatrix(3, std::move(m));
}

GateMatrix rotation(double theta, const std::array<double, 3>& axis) {
    const double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] +
                                 axis[2] * axis[2]);
    if (len < 1e-12) throw std::invalid_argument("rotation: zero axis");
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const double nx = axis[0] / len, ny = axis[1] / len, nz = axis[2] / len;
    const cx i{0.0, 1.0};
    return GateMatrix(1, {c - i * s * nz, -i * s * nx - s * ny,
                          -i * s * nx + s * ny, c + i * s * nz});
}

GateMatrix random_rotation(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> cosine(-1.0, 1.0);
    const double theta = angle(rng);
    const double z = cosine(rng);
    const double phi = angle(rng);
    const double r = std::sqrt(1.0 - z * z);
    return rotation(theta, {r * std::cos(phi), r * std::sin(phi), z});
}

namespace detail {

void apply_kernel(const GateMatrix& gate, const std::vector<int>& qubits,
                  int nq, cx* amps) {
    const std::size_t dim = std::size_t{1} << nq;
    const int k = gate.arity();
    if (k == 1) {
        // Hot path: the 2x2 pair kernel over all partner pairs.
        const std::size_t st = stride(nq, qubits[0]);
        const cx g00 = gate.at(0, 0), g01 = gate.at(0, 1);
        const cx g10 = gate.at(1, 0), g11 = gate.at(1, 1);
        for (std::size_t block = 0; block < dim; block += 2 * st) {
            for (std::size_t n0 = block; n0 < block + st; ++n0) {
                const cx c0 = amps[n0];
                const cx c1 = amps[n0 + st];
                amps[n0] = g00 * c0 + g01 * c1;
                amps[n0 + st] = g10 * c0 + g11 * c1;
            }
        }
        return;
    }
    // Quartet / octet kernels: group index bit j (most significant first)
    // corresponds to qubits[j], matching the gate's row ordering.
    std::array<std::size_t, 3> strides{};
    std::size_t mask = 0;
    for (int j = 0; j < k; ++j) {
        strides[j] = stride(nq, qubits[j]);
        mask |= strides[j];
    }
    const int gdim = gate.dim();
    std::array<cx, 8> in{}, out{};
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & mask) continue;
        for (int m = 0; m < gdim; ++m) {
            std::size_t idx = base;
            for (int j = 0; j < k; ++j) {
                if ((m >> (k - 1 - j)) & 1) idx += strides[j];
            }
            in[m] = amps[idx];
        }
        for (int r = 0; r < gdim; ++r) {
            cx sum{0.0, 0.0};
            for (int c = 0; c < gdim; ++c) sum += gate.at(r, c) * in[c];
            out[r] = sum;
        }
        for (int m = 0; m < gdim; ++m) {
            std::size_t idx = base;
            for (int j = 0; j < k; ++j) {
                if ((m >> (k - 1 - j)) & 1) idx += strides[j];
            }
            amps[idx] = out[m];
        }
    }
}

}  // namespace detail

StateVector op1(const GateMatrix& gate, int is, const StateVector& psi) {
    check_arity(gate, 1, "op1");
    detail::check_qubit_index(psi.num_qubits(), is, "op1");
    std::vector<cx> amps = psi.amps();
    detail::apply_kernel(gate, {is}, psi.num_qubits(), amps.data());
    return unchecked_state(psi.num_qubits(), std::move(amps));
}

StateVector op2(const GateMatrix& gate, int is1, int is2,
                const StateVector& psi) {
    check_arity(gate, 2, "op2");
    detail::check_qubit_index(psi.num_qubits(), is1, "op2");
    detail::check_qubit_index(psi.num_qubits(), is2, "op2");
    check_distinct({is1, is2}, "op2");
    std::vector<cx> amps = psi.amps();
    detail::apply_kernel(gate, {is1, is2}, psi.num_qubits(), amps.data());
    return unchecked_state(psi.num_qubits(), std::move(amps));
}

StateVector op3(const GateMatrix& gate, int is1, int is2, int is3,
                const StateVector& psi) {
    check_arity(gate, 3, "op3");
    detail::check_qubit_index(psi.num_qubits(), is1, "op3");
    detail::check_qubit_index(psi.num_qubits(), is2, "op3");
    detail::check_qubit_index(psi.num_qubits(), is3, "op3");
    check_distinct({is1, is2, is3}, "op3");
    std::vector<cx> amps = psi.amps();
    detail::apply_kernel(gate, {is1, is2, is3}, psi.num_qubits(), amps.data());
    return unchecked_state(psi.num_qubits(), std::move(amps));
}

StateVector omega_all(const GateMatrix& gate, const StateVector& psi) {
    check_arity(gate, 1, "omega_all");
    std::vector<cx> amps = psi.amps();
    for (int is = 1; is <= psi.num_qubits(); ++is) {
        detail::apply_kernel(gate, {is}, psi.num_qubits(), amps.data());
    }
    return unchecked_state(psi.num_qubits(), std::move(amps));
}

DensityMatrix conjugate_density(const GateMatrix& gate,
                                const std::vector<int>& qubits,
                                const DensityMatrix& rho) {
    if (static_cast<int>(qubits.size()) != gate.arity()) {
        throw std::invalid_argument(
            "conjugate_density: qubit count does not match gate arity");
    }
    for (int q : qubits) {
        detail::check_qubit_index(rho.num_qubits(), q, "conjugate_density");
    }
    check_distinct(qubits, "conjugate_density");

    const int nq = rho.num_qubits();
    Eigen::MatrixXcd m = rho.matrix();
    // Omega rho: kernel over each column, then (Omega rho)^dagger = rho
    // Omega^dagger for Hermitian rho, and a second column pass completes
    // Omega rho Omega^dagger.
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
        detail::apply_kernel(gate, qubits, nq, m.col(col).data());
    }
    m.adjointInPlace();
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
        detail::apply_kernel(gate, qubits, nq, m.col(col).data());
    }
    return DensityMatrix(nq, std::move(m));
}

}  // namespace quiver
