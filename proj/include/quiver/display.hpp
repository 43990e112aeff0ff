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

#include <string>

#include "quiver/multiverse.hpp"
#include "quiver/qstate.hpp"

namespace quiver {

/// Dirac-form rendering: sum of amplitude|bits> terms, skipping
/// amplitudes below the tolerance. Amplitudes print with 5 significant
/// digits.
std::string dirac_form(const StateVector& psi, double tolerance = 1e-10);

/// One row per nonzero amplitude: decimal index, bit label, magnitude,
/// phase in radians on (-pi, pi].
std::string amplitude_table(const StateVector& psi, double tolerance = 1e-10);

/// Text circuit sketch: one wire per qubit, time left to right, with
/// control dots, target crosses, and N markers for noise-only steps.
std::string ascii_circuit(const Schedule& schedule, int nq);

}  // namespace quiver
