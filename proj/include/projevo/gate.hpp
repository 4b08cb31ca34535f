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
#include <span>
#include <variant>
#include <vector>

#include "projevo/basis.hpp"
#include "projevo/bitstring.hpp"
#include "projevo/pauli.hpp"

namespace projevo {

/// One control qubit; closed fires on |1>, open on |0>.
struct Control {
  uint32_t qubit = 0;
  bool closed = true;

  bool operator==(const Control&) const = default;
};

/// Distinct control qubits, kept sorted by qubit index.
using ControlSpec = std::vector<Control>;

ControlSpec make_control_spec(std::vector<Control> controls);

/// Control pattern on qubits [0, width) given by the bits of a word
/// ('1' = closed).
ControlSpec pattern_controls(const std::string& word);

bool controls_fire(const ControlSpec& controls, uint64_t state_index,
                   uint32_t n);

struct XGate {
  uint32_t qubit;
  bool operator==(const XGate&) const = default;
};

struct CXGate {
  uint32_t control;
  uint32_t target;
  bool operator==(const CXGate&) const = default;
};

struct MCXGate {
  ControlSpec controls;
  uint32_t target;
  bool operator==(const MCXGate&) const = default;
};

enum class RotationAxis { X, Y, Z };

/// Controlled rotation exp(-i angle A / 2) on the target, A in {X, Y, Z}.
struct RotationGate {
  RotationAxis axis;
  double angle;
  ControlSpec controls;
  uint32_t target;
  bool operator==(const RotationGate&) const = default;
};

/// Multiplies by e^{i angle} on the control pattern; no target qubit.
struct PhaseGate {
  double angle;
  ControlSpec controls;
  bool operator==(const PhaseGate&) const = default;
};

struct GlobalPhaseGate {
  double angle;
  bool operator==(const GlobalPhaseGate&) const = default;
};

/// Controlled Pauli rotation exp(-i angle sigma / 2); sigma spans the full
/// register but must be identity on the control qubits.
struct PauliRotationGate {
  PauliString pauli;
  double angle;
  ControlSpec controls;
  bool operator==(const PauliRotationGate&) const = default;
};

/// Macro: exchanges the two computational basis states x and y.
struct TranspositionGate {
  BitString x;
  BitString y;
  bool operator==(const TranspositionGate&) const = default;
};

/// Macro: sends the j-th listed state to |j>.
struct PermToPrefixGate {
  std::vector<BitString> states;
  bool operator==(const PermToPrefixGate&) const = default;
};

using Gate = std::variant<XGate, CXGate, MCXGate, RotationGate, PhaseGate,
                          GlobalPhaseGate, PauliRotationGate, TranspositionGate,
                          PermToPrefixGate>;

/// Ordered gate list over n qubits; the leftmost gate is applied first.
class Circuit {
 public:
  explicit Circuit(uint32_t n);

  uint32_t qubit_count() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  void append(Gate gate);
  void extend(const Circuit& other);

  bool operator==(const Circuit&) const = default;

 private:
  uint32_t n_;
  std::vector<Gate> gates_;
};

/// Reversed gate order with every gate inverted.
Circuit adjoint(const Circuit& circuit);

/// Returns sigma~ with M sigma~ = sigma M for the X/CX circuit M given by
/// the gate sequence. Throws on any other gate kind.
PauliString conjugate_through(const PauliString& sigma,
                              std::span<const Gate> gates);

/// Image of sigma under conjugation by the circuit as it acts, M sigma M^dag.
PauliString propagate_forward(const PauliString& sigma,
                              std::span<const Gate> gates);

/// Applies an X/CX/MCX/Transposition/PermToPrefix circuit to a basis state.
BitString apply_permutation_circuit(const Circuit& circuit, BitString state);

}  // namespace projevo
