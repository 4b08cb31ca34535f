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

#include <string>
#include <utility>
#include <vector>

#include "projevo/synth.hpp"
#include "projevo/verify.hpp"

namespace projevo {

/// One (sigma, B, angle) instance of a composite evolution.
struct ExampleTerm {
  PauliString sigma;
  BasisSet basis;
  double angle;
};

/// A named family of commuting terms whose product realizes the example
/// exactly (no Trotterization).
struct ExampleSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ExampleTerm> terms;
};

/// Excitation between an occupied and a virtual index set: sigma has X on
/// every involved qubit and Z on the first occupied index; B holds the two
/// filled configurations embedded into total_qubits (spectators at 0). With
/// jordan_wigner set, sigma additionally carries the Z-chains between the
/// paired indices, giving the fermionic variant.
ExampleSpec qubit_excitation(size_t n_exc, std::vector<uint32_t> occupied,
                             std::vector<uint32_t> virtuals,
                             uint32_t total_qubits, double t,
                             bool jordan_wigner = false);

/// Diagonal trace-gate evolution on n+1 qubits (leading qubit controls the
/// block): one boundary term plus one 4-state orbit term per cosine value.
ExampleSpec trace_gate_spec(uint32_t n, double t);
Circuit trace_gate(uint32_t n, double t);

/// Oracle projector for MAX k-CUT on two color registers of ceil(log2 k)
/// qubits each; B collects the states of the equivalent color pairs.
ExampleSpec maxkcut_oracle(uint32_t k,
                           const std::vector<std::pair<uint32_t, uint32_t>>&
                               equivalent_colors,
                           double t);

/// Mixer terms lambda_i P_{V_i} where V_i is the subset of B paired by the
/// X-part of generator i.
ExampleSpec lx_mixer(const BasisSet& basis,
                     const std::vector<PauliString>& generators,
                     const std::vector<double>& angles);

/// Synthesizes the composite circuit for the example's terms in order. When
/// all terms live on one shared orbit the compression network is emitted
/// once around all rotations.
Circuit synthesize_example_circuit(const ExampleSpec& spec,
                                   Strategy strategy = Strategy::automatic);

/// Product of the per-term closed-form evolutions, composed in term order.
DenseUnitary composite_oracle(const ExampleSpec& spec,
                              uint32_t dense_cap = kDefaultDenseCap);

}  // namespace projevo
