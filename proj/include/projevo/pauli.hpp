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

#include <complex>
#include <string>
#include <string_view>

#include "projevo/bitstring.hpp"

namespace projevo {

/// A basis state together with a fourth root of unity, i^phase_exponent.
struct PhasedState {
  int phase_exponent = 0;  // in {0,1,2,3}
  BitString state;

  std::complex<double> phase() const;
};

/// Pauli string in symplectic form: sign * i^(a.b) X^a Z^b, where a is the
/// X-part, b the Z-part, and a.b their inner product mod 4. With sign = +1
/// the represented operator is Hermitian by construction. Phases are tracked
/// exactly as fourth roots of unity; there is no floating-point phase
/// arithmetic here.
class PauliString {
 public:
  PauliString(BitString x_part, BitString z_part, int sign = 1);

  /// Parses a word over {I,X,Y,Z}, optionally prefixed by '+' or '-'.
  static PauliString parse(std::string_view text);
  static PauliString identity(size_t n);

  size_t size() const { return x_.size(); }
  const BitString& x_part() const { return x_; }
  const BitString& z_part() const { return z_; }
  int sign() const { return sign_; }

  bool is_identity() const { return x_.none() && z_.none() && sign_ == 1; }
  bool is_diagonal() const { return x_.none(); }

  PauliString with_sign(int sign) const { return PauliString(x_, z_, sign); }

  /// sigma |z> = sign * i^(a.b) * (-1)^(b.z) |z xor a>.
  PhasedState apply_to_basis(const BitString& z) const;

  /// Symplectic-form test: a_p.b_q + a_q.b_p = 0 mod 2.
  bool commutes_with(const PauliString& other) const;

  /// Conjugation by a single X gate: X_q sigma X_q. Flips the sign iff the
  /// Z-part is set at q.
  PauliString conjugated_by_x(size_t qubit) const;

  /// Conjugation by a CX gate: maps X_c -> X_c X_t and Z_t -> Z_c Z_t; the
  /// result is again of canonical Hermitian form up to a +-1 sign.
  PauliString conjugated_by_cx(size_t control, size_t target) const;

  std::string str() const;

  bool operator==(const PauliString&) const = default;

 private:
  BitString x_;
  BitString z_;
  int sign_ = 1;
};

}  // namespace projevo
