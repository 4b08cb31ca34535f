// Copyright 2026 The projevo developers
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

#include <cstdint>

#include "projevo/gate.hpp"

namespace projevo {

/// Model-based resource estimate of a circuit after full lowering.
///
/// The cost model (all numbers are estimates, not exact synthesis results):
///   - a rotation by a generic angle costs ceil(c_t * log2(1/epsilon))
///     T gates; uncontrolled rotations at multiples of pi/2 are Clifford
///     and cost nothing;
///   - an MCX with m >= 2 controls uses the linear construction:
///     6(m-1) CX, 7(m-1) T and one ancilla; m = 1 is a plain CX;
///   - a rotation with m >= 1 controls decomposes into two half-angle
///     rotations and two MCX(m); a controlled phase on an m-qubit pattern
///     is costed as a rotation with m-1 controls.
///
/// depth is the layered depth of the lowered circuit (every gate placed as
/// early as its qubits allow), an upper bound for any scheduling model.
struct ResourceCount {
  uint64_t cx = 0;
  uint64_t t_count = 0;
  uint64_t rotation_count = 0;
  uint64_t mcx_count = 0;
  uint32_t ancillas = 0;
  uint64_t depth = 0;
  double epsilon = 0.0;
};

ResourceCount count_resources(const Circuit& circuit, double epsilon,
                              double t_model_constant = 3.0);

/// T cost of one generic rotation under the model.
uint64_t rotation_t_cost(double epsilon, double t_model_constant = 3.0);

}  // namespace projevo
