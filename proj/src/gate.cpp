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

#include "projevo/gate.hpp"

#include <algorithm>
#include <stdexcept>

#include "projevo/lowering.hpp"

namespace projevo {

namespace {

void require(bool ok, const char* message) {
  if (!ok) {
    throw std::invalid_argument(message);
  }
}

void check_controls(const ControlSpec& controls, uint32_t n) {
  for (size_t i = 0; i < controls.size(); ++i) {
    require(controls[i].qubit < n, "control qubit out of range");
    if (i > 0) {
      require(controls[i - 1].qubit < controls[i].qubit,
              "control qubits must be distinct and sorted");
    }
  }
}

}  // namespace

ControlSpec make_control_spec(std::vector<Control> controls) {
  std::sort(controls.begin(), controls.end(),
            [](const Control& a, const Control& b) { return a.qubit < b.qubit; });
  for (size_t i = 1; i < controls.size(); ++i) {
    require(controls[i - 1].qubit != controls[i].qubit,
            "duplicate control qubit");
  }
  return controls;
}

ControlSpec pattern_controls(const std::string& word) {
  ControlSpec spec;
  spec.reserve(word.size());
  for (uint32_t q = 0; q < word.size(); ++q) {
    require(word[q] == '0' || word[q] == '1', "pattern must be over {0,1}");
    spec.push_back(Control{q, word[q] == '1'});
  }
  return spec;
}

bool controls_fire(const ControlSpec& controls, uint64_t state_index,
                   uint32_t n) {
  for (const auto& c : controls) {
    bool bit = (state_index >> (n - 1 - c.qubit)) & 1u;
    if (bit != c.closed) {
      return false;
    }
  }
  return true;
}

Circuit::Circuit(uint32_t n) : n_(n) {
  if (n == 0 || n > 64) {
    throw std::invalid_argument("circuit qubit count must be in [1, 64]");
  }
}

void Circuit::append(Gate gate) {
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, XGate>) {
          require(g.qubit < n_, "qubit out of range");
        } else if constexpr (std::is_same_v<T, CXGate>) {
          require(g.control < n_ && g.target < n_, "qubit out of range");
          require(g.control != g.target, "CX control equals target");
        } else if constexpr (std::is_same_v<T, MCXGate>) {
          require(g.target < n_, "qubit out of range");
          check_controls(g.controls, n_);
          for (const auto& c : g.controls) {
            require(c.qubit != g.target, "target among controls");
          }
        } else if constexpr (std::is_same_v<T, RotationGate>) {
          require(g.target < n_, "qubit out of range");
          check_controls(g.controls, n_);
          for (const auto& c : g.controls) {
            require(c.qubit != g.target, "target among controls");
          }
        } else if constexpr (std::is_same_v<T, PhaseGate>) {
          check_controls(g.controls, n_);
        } else if constexpr (std::is_same_v<T, GlobalPhaseGate>) {
          // nothing to check
        } else if constexpr (std::is_same_v<T, PauliRotationGate>) {
          require(g.pauli.size() == n_, "Pauli length does not match circuit");
          require(!g.pauli.x_part().none() || !g.pauli.z_part().none(),
                  "identity Pauli rotation");
          check_controls(g.controls, n_);
          for (const auto& c : g.controls) {
            require(!g.pauli.x_part().bit(c.qubit) &&
                        !g.pauli.z_part().bit(c.qubit),
                    "Pauli support overlaps controls");
          }
        } else if constexpr (std::is_same_v<T, TranspositionGate>) {
          require(g.x.size() == n_ && g.y.size() == n_,
                  "transposition state length does not match circuit");
          require(g.x != g.y, "transposition of a state with itself");
        } else if constexpr (std::is_same_v<T, PermToPrefixGate>) {
          require(!g.states.empty(), "empty permutation");
          for (const auto& z : g.states) {
            require(z.size() == n_, "permutation state length mismatch");
          }
        }
      },
      gate);
  gates_.push_back(std::move(gate));
}

void Circuit::extend(const Circuit& other) {
  if (other.n_ != n_) {
    throw std::invalid_argument("circuit qubit counts differ");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit adjoint(const Circuit& circuit) {
  Circuit out(circuit.qubit_count());
  const auto& gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, RotationGate>) {
            out.append(RotationGate{g.axis, -g.angle, g.controls, g.target});
          } else if constexpr (std::is_same_v<T, PhaseGate>) {
            out.append(PhaseGate{-g.angle, g.controls});
          } else if constexpr (std::is_same_v<T, GlobalPhaseGate>) {
            out.append(GlobalPhaseGate{-g.angle});
          } else if constexpr (std::is_same_v<T, PauliRotationGate>) {
            out.append(PauliRotationGate{g.pauli, -g.angle, g.controls});
          } else if constexpr (std::is_same_v<T, PermToPrefixGate>) {
            // Inverse of the transposition chain, reversed.
            auto swaps = perm_to_prefix_transpositions(g.states);
            for (auto it2 = swaps.rbegin(); it2 != swaps.rend(); ++it2) {
              out.append(TranspositionGate{it2->first, it2->second});
            }
          } else {
            out.append(g);  // self-inverse
          }
        },
        *it);
  }
  return out;
}

PauliString conjugate_through(const PauliString& sigma,
                              std::span<const Gate> gates) {
  // sigma~ = M^dag sigma M; peel gates from the outside in.
  PauliString result = sigma;
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    if (const auto* x = std::get_if<XGate>(&*it)) {
      result = result.conjugated_by_x(x->qubit);
    } else if (const auto* cx = std::get_if<CXGate>(&*it)) {
      result = result.conjugated_by_cx(cx->control, cx->target);
    } else {
      throw std::invalid_argument(
          "conjugate_through supports only X and CX gates");
    }
  }
  return result;
}

PauliString propagate_forward(const PauliString& sigma,
                              std::span<const Gate> gates) {
  PauliString result = sigma;
  for (const auto& gate : gates) {
    if (const auto* x = std::get_if<XGate>(&gate)) {
      result = result.conjugated_by_x(x->qubit);
    } else if (const auto* cx = std::get_if<CXGate>(&gate)) {
      result = result.conjugated_by_cx(cx->control, cx->target);
    } else {
      throw std::invalid_argument(
          "propagate_forward supports only X and CX gates");
    }
  }
  return result;
}

BitString apply_permutation_circuit(const Circuit& circuit, BitString state) {
  if (state.size() != circuit.qubit_count()) {
    throw std::invalid_argument("state length does not match circuit");
  }
  const uint32_t n = circuit.qubit_count();
  for (const auto& gate : circuit.gates()) {
    std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, XGate>) {
            state = state.with_bit(g.qubit, !state.bit(g.qubit));
          } else if constexpr (std::is_same_v<T, CXGate>) {
            if (state.bit(g.control)) {
              state = state.with_bit(g.target, !state.bit(g.target));
            }
          } else if constexpr (std::is_same_v<T, MCXGate>) {
            if (controls_fire(g.controls, state.value(), n)) {
              state = state.with_bit(g.target, !state.bit(g.target));
            }
          } else if constexpr (std::is_same_v<T, TranspositionGate>) {
            if (state == g.x) {
              state = g.y;
            } else if (state == g.y) {
              state = g.x;
            }
          } else if constexpr (std::is_same_v<T, PermToPrefixGate>) {
            for (const auto& [x, y] : perm_to_prefix_transpositions(g.states)) {
              if (state == x) {
                state = y;
              } else if (state == y) {
                state = x;
              }
            }
          } else {
            throw std::invalid_argument(
                "circuit contains a non-permutation gate");
          }
        },
        gate);
  }
  return state;
}

}  // namespace projevo
