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

#include "projevo/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace projevo {

BitString::BitString(size_t n, uint64_t value) : n_(n), value_(value) {
  if (n == 0 || n > 64) {
    throw std::invalid_argument("BitString length must be in [1, 64]");
  }
  if (n < 64 && (value >> n) != 0) {
    throw std::invalid_argument("BitString value does not fit in " +
                                std::to_string(n) + " bits");
  }
}

BitString BitString::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty bitstring");
  }
  if (text.size() > 64) {
    throw std::invalid_argument("bitstring longer than 64 bits");
  }
  uint64_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring may only contain 0 and 1, got '" +
                                  std::string(text) + "'");
    }
    v = (v << 1) | static_cast<uint64_t>(c == '1');
  }
  return BitString(text.size(), v);
}

BitString BitString::zeros(size_t n) { return BitString(n, 0); }

bool BitString::bit(size_t j) const {
  if (j >= n_) {
    throw std::out_of_range("bit index out of range");
  }
  return (value_ >> (n_ - 1 - j)) & 1u;
}

BitString BitString::with_bit(size_t j, bool v) const {
  if (j >= n_) {
    throw std::out_of_range("bit index out of range");
  }
  uint64_t mask = uint64_t{1} << (n_ - 1 - j);
  return BitString(n_, v ? (value_ | mask) : (value_ & ~mask));
}

bool BitString::dot(const BitString& other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("bitstring length mismatch");
  }
  return std::popcount(value_ & other.value_) & 1;
}

int BitString::weight() const { return std::popcount(value_); }

std::vector<size_t> BitString::support() const {
  std::vector<size_t> out;
  for (size_t j = 0; j < n_; ++j) {
    if (bit(j)) {
      out.push_back(j);
    }
  }
  return out;
}

std::string BitString::str() const {
  std::string s(n_, '0');
  for (size_t j = 0; j < n_; ++j) {
    if (bit(j)) {
      s[j] = '1';
    }
  }
  return s;
}

BitString operator^(const BitString& a, const BitString& b) {
  if (a.n_ != b.n_) {
    throw std::invalid_argument("bitstring length mismatch");
  }
  return BitString(a.n_, a.value_ ^ b.value_);
}

}  // namespace projevo
