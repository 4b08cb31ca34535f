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
#include <unordered_set>
#include <utility>
#include <vector>

#include "projevo/bitstring.hpp"

namespace projevo {

/// Ordered set of distinct computational basis states defining B and P_B.
class BasisSet {
 public:
  BasisSet(size_t n, std::vector<BitString> states);
  static BasisSet from_strings(size_t n, const std::vector<std::string>& states);

  size_t qubit_count() const { return n_; }
  size_t size() const { return states_.size(); }
  bool empty() const { return states_.empty(); }
  const std::vector<BitString>& states() const { return states_; }
  const BitString& operator[](size_t i) const { return states_[i]; }
  bool contains(const BitString& z) const;

  bool operator==(const BasisSet& other) const {
    return n_ == other.n_ && states_ == other.states_;
  }

 private:
  size_t n_;
  std::vector<BitString> states_;
  std::unordered_set<uint64_t> index_;
};

/// An X-orbit coset: {reference xor v : v in span(generators)}. Generators
/// are linearly independent XOR masks in GF(2) reduced row echelon form,
/// ordered by pivot position, so the generating set is canonical.
struct OrbitStructure {
  BitString reference;
  std::vector<BitString> generators;

  size_t dimension() const { return generators.size(); }

  /// All 2^k coset elements; element i applies generator j iff bit j of i
  /// is set (generator 0 toggles fastest).
  std::vector<BitString> expand() const;
};

/// Pairs of basis states connected by an X-mask. In the ordered case the
/// first element of each pair has Z^b-eigenvalue +1; in either case
/// second = first xor a.
struct PairSet {
  std::vector<std::pair<BitString, BitString>> pairs;
  bool ordered = false;
};

}  // namespace projevo
