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

#include "projevo/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace projevo {

namespace {

// Inner product Sum_j a_j b_j mod 4 (each term is 0 or 1, so this is the
// popcount of the overlap mod 4).
int dot_mod4(const BitString& a, const BitString& b) {
  return std::popcount(a.value() & b.value()) % 4;
}

int sign_from_exponents(int k, int ab) {
  int diff = ((k - ab) % 4 + 4) % 4;
  if (diff == 0) {
    return 1;
  }
  if (diff == 2) {
    return -1;
  }
  throw std::logic_error("Pauli phase left the +-1 class");
}

}  // namespace

std::complex<double> PhasedState::phase() const {
  switch (((phase_exponent % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

PauliString::PauliString(BitString x_part, BitString z_part, int sign)
    : x_(x_part), z_(z_part), sign_(sign) {
  if (x_.size() != z_.size()) {
    throw std::invalid_argument("X- and Z-part lengths differ");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("Pauli sign must be +1 or -1");
  }
}

PauliString PauliString::parse(std::string_view text) {
  int sign = 1;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign = text.front() == '-' ? -1 : 1;
    text.remove_prefix(1);
  }
  if (text.empty()) {
    throw std::invalid_argument("empty Pauli string");
  }
  if (text.size() > 64) {
    throw std::invalid_argument("Pauli string longer than 64 qubits");
  }
  uint64_t a = 0;
  uint64_t b = 0;
  for (char c : text) {
    a <<= 1;
    b <<= 1;
    switch (c) {
      case 'I':
        break;
      case 'X':
        a |= 1;
        break;
      case 'Y':
        a |= 1;
        b |= 1;
        break;
      case 'Z':
        b |= 1;
        break;
      default:
        throw std::invalid_argument("invalid Pauli character '" +
                                    std::string(1, c) + "'");
    }
  }
  size_t n = text.size();
  return PauliString(BitString(n, a), BitString(n, b), sign);
}

PauliString PauliString::identity(size_t n) {
  return PauliString(BitString::zeros(n), BitString::zeros(n));
}

PhasedState PauliString::apply_to_basis(const BitString& z) const {
  if (z.size() != size()) {
    throw std::invalid_argument("state length does not match Pauli length");
  }
  int k = dot_mod4(x_, z_) + (sign_ < 0 ? 2 : 0) + (z_.dot(z) ? 2 : 0);
  return PhasedState{k % 4, z ^ x_};
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (other.size() != size()) {
    throw std::invalid_argument("Pauli length mismatch");
  }
  return !(x_.dot(other.z_) ^ other.x_.dot(z_));
}

PauliString PauliString::conjugated_by_x(size_t qubit) const {
  int sign = z_.bit(qubit) ? -sign_ : sign_;
  return PauliString(x_, z_, sign);
}

PauliString PauliString::conjugated_by_cx(size_t control, size_t target) const {
  // In the exact representation i^k X^a Z^b, conjugation by CX keeps k while
  // mapping a_t ^= a_c and b_c ^= b_t; the canonical sign is recovered from
  // the new inner product.
  int k = (dot_mod4(x_, z_) + (sign_ < 0 ? 2 : 0)) % 4;
  BitString a = x_.with_bit(target, x_.bit(target) ^ x_.bit(control));
  BitString b = z_.with_bit(control, z_.bit(control) ^ z_.bit(target));
  return PauliString(a, b, sign_from_exponents(k, dot_mod4(a, b)));
}

std::string PauliString::str() const {
  std::string s;
  if (sign_ < 0) {
    s.push_back('-');
  }
  for (size_t j = 0; j < size(); ++j) {
    bool a = x_.bit(j);
    bool b = z_.bit(j);
    s.push_back(a ? (b ? 'Y' : 'X') : (b ? 'Z' : 'I'));
  }
  return s;
}

}  // namespace projevo
