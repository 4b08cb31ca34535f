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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace projevo {

/// Fixed-length binary word indexing a computational basis state.
///
/// Index 0 is the leftmost character of the textual form and the most
/// significant bit of the integer value. Qubit j therefore corresponds to
/// bit (n-1-j) of value(), so XOR masks act directly on basis-state indices.
class BitString {
 public:
  BitString() = default;
  BitString(size_t n, uint64_t value);

  static BitString parse(std::string_view text);
  static BitString zeros(size_t n);

  size_t size() const { return n_; }
  uint64_t value() const { return value_; }

  bool bit(size_t j) const;
  BitString with_bit(size_t j, bool v) const;

  /// GF(2) inner product.
  bool dot(const BitString& other) const;
  int weight() const;
  bool none() const { return value_ == 0; }

  /// Indices of set bits, ascending.
  std::vector<size_t> support() const;

  std::string str() const;

  friend BitString operator^(const BitString& a, const BitString& b);

  // Orders first by length, then by integer value; for equal lengths this is
  // the lexicographic order on the textual form.
  auto operator<=>(const BitString&) const = default;

 private:
  size_t n_ = 0;
  uint64_t value_ = 0;
};

}  // namespace projevo
