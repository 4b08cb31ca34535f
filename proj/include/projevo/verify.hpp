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

#include <Eigen/Dense>

#include "projevo/gate.hpp"
#include "projevo/subspace.hpp"

namespace projevo {

/// Dense complex matrix over the big-endian computational basis: row/column
/// index j is the integer value of the basis word, qubit 0 most significant.
using DenseUnitary = Eigen::MatrixXcd;

inline constexpr uint32_t kDefaultDenseCap = 12;

/// Applies the gates in order to the identity. Throws when the qubit count
/// exceeds the cap (the matrix has 4^n entries).
DenseUnitary circuit_unitary(const Circuit& circuit,
                             uint32_t dense_cap = kDefaultDenseCap);

/// Closed-form evolution: I + (cos t - 1) P_B + i sin(t) sigma P_B. Built
/// directly, no matrix exponential. Requires [sigma, P_B] = 0, otherwise the
/// closed form would not be unitary.
DenseUnitary exact_evolution(const PauliString& sigma, const BasisSet& basis,
                             double t, uint32_t dense_cap = kDefaultDenseCap);

/// Max-entry absolute deviation between the circuit unitary and the closed
/// form; global phase counts.
double verify_circuit(const PauliString& sigma, const BasisSet& basis, double t,
                      const Circuit& circuit,
                      uint32_t dense_cap = kDefaultDenseCap);

/// Dense matrix of a Pauli string.
DenseUnitary pauli_matrix(const PauliString& sigma,
                          uint32_t dense_cap = kDefaultDenseCap);

/// Number of Pauli terms in sigma P_B: the count of nonzero Walsh-Hadamard
/// coefficients of the indicator vector of B (multiplying by sigma permutes
/// Pauli strings, so the count is the same).
uint64_t baseline_pauli_terms(const PauliString& sigma, const BasisSet& basis);

/// Same count summed over the parts of cover_by_orbits(basis, sigma); this is
/// the naive cost of evolving each part separately.
uint64_t baseline_terms_by_parts(const PauliString& sigma,
                                 const BasisSet& basis);

}  // namespace projevo
