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

#include "quiver/display.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace quiver {

namespace {

std::string sig5(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%#.5g", v);
    return buf;
}

std::string sig6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string bit_label(std::size_t n, int nq) {
    std::string s;
    for (int b : decimal_to_bits(n, nq)) s += static_cast<char>('0' + b);
    return s;
}

}  // namespace

std::string dirac_form(const StateVector& psi, double tolerance) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t n = 0; n < psi.dim(); ++n) {
        const cx a = psi.amp(n);
        if (std::abs(a) < tolerance) continue;
        std::string coef;
        bool negative = false;
        if (std::abs(a.imag()) < tolerance) {
            negative = a.real() < 0.0;
            coef = sig5(std::abs(a.real()));
        } else if (std::abs(a.real()) < tolerance) {
            negative = a.imag() < 0.0;
            coef = sig5(std::abs(a.imag())) + "i";
        } else {
            coef = "(" + sig5(a.real()) + (a.imag() < 0.0 ? " - " : " + ") +
                   sig5(std::abs(a.imag())) + "i)";
        }
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        out << coef << "|" << bit_label(n, psi.num_qubits()) << ">";
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

std::string amplitude_table(const StateVector& psi, double tolerance) {
    std::ostringstream out;
    out << "n\tbits\tmagnitude\tphase\n";
    for (std::size_t n = 0; n < psi.dim(); ++n) {
        const cx a = psi.amp(n);
        const double mag = std::abs(a);
        if (mag < tolerance) continue;
        double phase = std::arg(a);
        if (phase <= -M_PI) phase += 2.0 * M_PI;
        out << n << "\t" << bit_label(n, psi.num_qubits()) << "\t"
            << sig6(mag) << "\t" << sig6(phase) << "\n";
    }
    return out.str();
}

std::string ascii_circuit(const Schedule& schedule, int nq) {
    std::vector<std::string> wires(nq);
    for (int q = 0; q < nq; ++q) {
        wires[q] = "q" + std::to_string(q + 1) + ": ";
    }

    auto cell = [](const std::string& sym) { return "--" + sym + "--"; };

    for (const ScheduleStep& step : schedule) {
        std::vector<std::string> symbols(nq, "-");
        if (step.op) {
            const AlgorithmOp& op = *step.op;
            const std::size_t k = op.qubits.size();
            if (k >= 2) {
                // controlled gates: controls first, target last
                for (std::size_t i = 0; i + 1 < k; ++i) {
                    symbols[op.qubits[i] - 1] = "●";
                }
                symbols[op.qubits.back() - 1] = "⊕";
            } else {
                const std::string label =
                    op.label.empty() ? "U" : op.label.substr(0, 1);
                symbols[op.qubits[0] - 1] = label;
            }
        } else if (step.noise) {
            for (int q = 0; q < nq; ++q) symbols[q] = "N";
        }
        for (int q = 0; q < nq; ++q) wires[q] += cell(symbols[q]);
    }

    std::string out;
    for (int q = 0; q < nq; ++q) out += wires[q] + "\n";
    return out;
}

}  // namespace quiver
