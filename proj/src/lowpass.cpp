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

#include "projevo/lowpass.hpp"

#include <stdexcept>

namespace projevo {

namespace {

void check_range(uint64_t k_states, uint32_t n) {
  if (n > 63) {
    throw std::invalid_argument("low-pass register limited to 63 qubits");
  }
  if (k_states < 1 || k_states > (uint64_t{1} << n)) {
    throw std::invalid_argument("K must lie in [1, 2^n]");
  }
}

std::string pattern_word(uint64_t value, uint32_t length) {
  std::string s(length, '0');
  for (uint32_t i = 0; i < length; ++i) {
    if ((value >> (length - 1 - i)) & 1u) {
      s[i] = '1';
    }
  }
  return s;
}

// Direct expansion: one pattern per set bit of K. The bits shared by the
// j-th interval [K_j, K_{j+1}-1] are c_j = (K >> k_j) ^ 1 on n - k_j qubits.
std::vector<std::string> direct_patterns(uint64_t k_states, uint32_t n) {
  std::vector<std::string> out;
  for (int k = static_cast<int>(n); k >= 0; --k) {
    if ((k_states >> k) & 1u) {
      out.push_back(pattern_word((k_states >> k) ^ 1u, n - k));
    }
  }
  return out;
}

std::vector<std::string> complement_all(std::vector<std::string> patterns) {
  for (auto& p : patterns) {
    for (auto& c : p) {
      c = (c == '0') ? '1' : '0';
    }
  }
  return patterns;
}

size_t control_sum(const std::vector<std::string>& patterns) {
  size_t total = 0;
  for (const auto& p : patterns) {
    total += p.size();
  }
  return total;
}

}  // namespace

size_t LowPassPlan::total_controls() const { return control_sum(patterns); }

LowPassPlan lowpass_patterns(uint64_t k_states, uint32_t register_size) {
  check_range(k_states, register_size);
  std::vector<std::string> direct = direct_patterns(k_states, register_size);

  uint64_t rest = (uint64_t{1} << register_size) - k_states;
  if (rest == 0) {
    return LowPassPlan{k_states, register_size, false, std::move(direct)};
  }
  std::vector<std::string> comp =
      complement_all(direct_patterns(rest, register_size));
  if (control_sum(comp) < control_sum(direct)) {
    return LowPassPlan{k_states, register_size, true, std::move(comp)};
  }
  return LowPassPlan{k_states, register_size, false, std::move(direct)};
}

LowPassPlan highpass_patterns(uint64_t k_states, uint32_t register_size) {
  check_range(k_states, register_size);
  return LowPassPlan{k_states, register_size, false,
                     complement_all(direct_patterns(k_states, register_size))};
}

Circuit synth_lowpass_phase(uint64_t k_states, uint32_t register_size,
                            double angle, uint32_t total_qubits) {
  if (register_size > total_qubits) {
    throw std::invalid_argument("register larger than circuit");
  }
  LowPassPlan plan = lowpass_patterns(k_states, register_size);
  Circuit circuit(total_qubits);
  double gate_angle = angle;
  if (plan.complemented) {
    circuit.append(GlobalPhaseGate{angle});
    gate_angle = -angle;
  }
  for (const auto& word : plan.patterns) {
    if (word.empty()) {
      circuit.append(GlobalPhaseGate{gate_angle});
    } else {
      circuit.append(PhaseGate{gate_angle, pattern_controls(word)});
    }
  }
  return circuit;
}

Circuit synth_lowpass_rotation(uint64_t k_states, uint32_t register_size,
                               RotationAxis axis, double angle, uint32_t target,
                               uint32_t total_qubits) {
  if (register_size > total_qubits || target >= total_qubits) {
    throw std::invalid_argument("register or target out of range");
  }
  if (target < register_size) {
    throw std::invalid_argument("target lies inside the control register");
  }
  LowPassPlan plan = lowpass_patterns(k_states, register_size);
  Circuit circuit(total_qubits);
  double gate_angle = angle;
  if (plan.complemented) {
    circuit.append(RotationGate{axis, angle, {}, target});
    gate_angle = -angle;
  }
  for (const auto& word : plan.patterns) {
    circuit.append(RotationGate{axis, gate_angle, pattern_controls(word), target});
  }
  return circuit;
}

}  // namespace projevo
