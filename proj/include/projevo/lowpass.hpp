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
#include <string>
#include <vector>

#include "projevo/gate.hpp"

namespace projevo {

/// Control patterns realizing a low-pass controlled unitary C_{<=K} over an
/// n-qubit register. Each pattern is a polarity word on the leading qubits
/// ('1' = closed); the j-th direct pattern has n - k_j controls where
/// K = sum 2^{k_j}, k_1 > k_2 > ... . When complemented is set, the plan is
/// the identity-times-inverse form: apply U unconditionally, then U^dag on
/// each pattern (the patterns fire on the last 2^n - K states).
struct LowPassPlan {
  uint64_t k_states = 0;
  uint32_t register_size = 0;
  bool complemented = false;
  std::vector<std::string> patterns;

  size_t total_controls() const;
};

/// Direct expansion of C_{<=K}: fires on states with index < K. Picks the
/// complemented form when it needs fewer controls in total; ties go to the
/// direct form.
LowPassPlan lowpass_patterns(uint64_t k_states, uint32_t register_size);

/// Patterns of the gate firing on the last K states (index >= 2^n - K);
/// the low-pass patterns of K with every polarity flipped.
LowPassPlan highpass_patterns(uint64_t k_states, uint32_t register_size);

/// C_{<=K} Ph(angle): multiplies the first K register states by e^{i angle}.
/// The register occupies qubits [0, register_size) of a circuit with
/// total_qubits qubits.
Circuit synth_lowpass_phase(uint64_t k_states, uint32_t register_size,
                            double angle, uint32_t total_qubits);

/// C_{<=K} Rot: applies exp(-i angle A / 2) to the target qubit when the
/// register reads a state with index < K.
Circuit synth_lowpass_rotation(uint64_t k_states, uint32_t register_size,
                               RotationAxis axis, double angle, uint32_t target,
                               uint32_t total_qubits);

}  // namespace projevo
