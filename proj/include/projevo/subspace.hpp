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

#include <optional>
#include <utility>
#include <vector>

#include "projevo/basis.hpp"
#include "projevo/pauli.hpp"

namespace projevo {

/// True iff sigma P_B = P_B sigma. Since sigma permutes basis states up to
/// phase, this is exactly closure of B under XOR with the X-part.
bool commutes_with_projector(const PauliString& sigma, const BasisSet& basis);

/// Splits B by the Z^b eigenvalue: (B+, B-) with z in B+ iff b.z = 0 mod 2.
/// Relative order is preserved.
std::pair<BasisSet, BasisSet> split_by_z_eigenvalue(const BasisSet& basis,
                                                    const BitString& z_mask);

/// Result of pairing B under the X-part of sigma. When the X- and Z-parts
/// anticommute there is a single ordered pair set; when they commute the
/// pairs split by their shared Z^b eigenvalue.
struct XPairing {
  bool anticommuting = false;
  PairSet ordered;     // anticommuting case
  PairSet plus, minus; // commuting case, keyed by eigenvalue
};

XPairing pair_by_x(const BasisSet& basis, const PauliString& sigma);

/// Succeeds iff |B| = 2^k and the difference set relative to the first
/// element is a k-dimensional GF(2) subspace. Generators come back in
/// reduced row echelon form.
std::optional<OrbitStructure> detect_orbit(const BasisSet& basis);

/// Greedily partitions B into X-orbit cosets, each closed under XOR with the
/// X-part of sigma. Parts are ordered by first occurrence in B. Requires
/// commutes_with_projector(sigma, basis).
std::vector<OrbitStructure> cover_by_orbits(const BasisSet& basis,
                                            const PauliString& sigma);

/// Reduced-row-echelon insertion over GF(2); pivots are the most significant
/// set bits. Rows stay sorted by descending pivot.
class Gf2RowBasis {
 public:
  /// Reduces v against the basis; if independent, inserts it and returns
  /// true, else returns false.
  bool insert(uint64_t v);
  bool in_span(uint64_t v) const { return reduce(v) == 0; }
  uint64_t reduce(uint64_t v) const;
  size_t rank() const { return rows_.size(); }
  const std::vector<uint64_t>& rows() const { return rows_; }

 private:
  std::vector<uint64_t> rows_;
};

}  // namespace projevo
