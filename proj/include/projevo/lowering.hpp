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

#include <utility>
#include <vector>

#include "projevo/gate.hpp"

namespace projevo {

/// CX edges of a balanced fan-out tree over the given (ascending) support
/// indices, emitted in the order that maps |mask> to |e_pivot> and fixes
/// |0...0>. The pivot is the first support index. The reversed list is the
/// GHZ-style broadcast that copies the pivot across the support.
std::vector<CXGate> fanout_compress_edges(const std::vector<size_t>& support);

/// Transposition T_{x,y} as one MCX with n-1 controls, 2(|support(x^y)|-1)
/// CX gates, at most 2n X gates and no ancilla. For n = 1 this degenerates
/// to a single X.
Circuit lower_transposition(const BitString& x, const BitString& y);

/// Transposition sequence sending the j-th listed state to |j>; states
/// already in place are skipped.
std::vector<std::pair<BitString, BitString>> perm_to_prefix_transpositions(
    const std::vector<BitString>& states);

Circuit lower_perm_to_prefix(const BasisSet& basis);

/// Fig-style realization of a controlled Pauli rotation: single-qubit basis
/// changes onto Z, a CX chain onto the last support qubit, one controlled
/// Z-rotation, and the inverse chain.
Circuit lower_pauli_rotation(const PauliRotationGate& gate, uint32_t n);

/// Expands Transposition and PermToPrefix macros into X/CX/MCX gates.
Circuit lower_macros(const Circuit& circuit);

/// lower_macros plus expansion of Pauli rotations into the primitive set
/// {X, CX, MCX, CRot, CPhase, GPhase}.
Circuit lower_full(const Circuit& circuit);

}  // namespace projevo
