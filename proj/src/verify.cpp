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

#include "projevo/verify.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "projevo/lowering.hpp"

namespace projevo {

namespace {

using complexd = std::complex<double>;
constexpr complexd kI{0.0, 1.0};

uint64_t qubit_mask(uint32_t q, uint32_t n) {
  return uint64_t{1} << (n - 1 - q);
}

void check_cap(uint32_t n, uint32_t cap) {
  if (n > cap) {
    throw std::invalid_argument("qubit count " + std::to_string(n) +
                                " exceeds dense cap " + std::to_string(cap));
  }
}

// 2x2 rotation exp(-i angle A / 2).
void rotation_block(RotationAxis axis, double angle, complexd r[2][2]) {
  double c = std::cos(angle / 2);
  double s = std::sin(angle / 2);
  switch (axis) {
    case RotationAxis::X:
      r[0][0] = c;
      r[0][1] = -kI * s;
      r[1][0] = -kI * s;
      r[1][1] = c;
      break;
    case RotationAxis::Y:
      r[0][0] = c;
      r[0][1] = -s;
      r[1][0] = s;
      r[1][1] = c;
      break;
    case RotationAxis::Z:
      r[0][0] = std::exp(-kI * (angle / 2));
      r[0][1] = 0;
      r[1][0] = 0;
      r[1][1] = std::exp(kI * (angle / 2));
      break;
  }
}

void apply_gate(DenseUnitary& u, const Gate& gate, uint32_t n) {
  const uint64_t dim = uint64_t{1} << n;
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, XGate>) {
          uint64_t m = qubit_mask(g.qubit, n);
          for (uint64_t r = 0; r < dim; ++r) {
            if (!(r & m)) {
              u.row(r).swap(u.row(r | m));
            }
          }
        } else if constexpr (std::is_same_v<T, CXGate>) {
          uint64_t mc = qubit_mask(g.control, n);
          uint64_t mt = qubit_mask(g.target, n);
          for (uint64_t r = 0; r < dim; ++r) {
            if ((r & mc) && !(r & mt)) {
              u.row(r).swap(u.row(r | mt));
            }
          }
        } else if constexpr (std::is_same_v<T, MCXGate>) {
          uint64_t mt = qubit_mask(g.target, n);
          for (uint64_t r = 0; r < dim; ++r) {
            if (!(r & mt) && controls_fire(g.controls, r, n)) {
              u.row(r).swap(u.row(r | mt));
            }
          }
        } else if constexpr (std::is_same_v<T, RotationGate>) {
          complexd rot[2][2];
          rotation_block(g.axis, g.angle, rot);
          uint64_t mt = qubit_mask(g.target, n);
          for (uint64_t r = 0; r < dim; ++r) {
            if (!(r & mt) && controls_fire(g.controls, r, n)) {
              Eigen::RowVectorXcd top = u.row(r);
              u.row(r) = rot[0][0] * top + rot[0][1] * u.row(r | mt);
              u.row(r | mt) = rot[1][0] * top + rot[1][1] * u.row(r | mt);
            }
          }
        } else if constexpr (std::is_same_v<T, PhaseGate>) {
          complexd ph = std::exp(kI * g.angle);
          for (uint64_t r = 0; r < dim; ++r) {
            if (controls_fire(g.controls, r, n)) {
              u.row(r) *= ph;
            }
          }
        } else if constexpr (std::is_same_v<T, GlobalPhaseGate>) {
          u *= std::exp(kI * g.angle);
        } else if constexpr (std::is_same_v<T, PauliRotationGate>) {
          double angle = g.pauli.sign() < 0 ? -g.angle : g.angle;
          double c = std::cos(angle / 2);
          double s = std::sin(angle / 2);
          const PauliString body = g.pauli.with_sign(1);
          uint64_t ma = body.x_part().value();
          for (uint64_t r = 0; r < dim; ++r) {
            if (!controls_fire(g.controls, r, n)) {
              continue;
            }
            uint64_t w = r ^ ma;
            if (ma == 0) {
              complexd ph = body.apply_to_basis(BitString(n, r)).phase();
              u.row(r) *= (c - kI * s * ph);
            } else if (r < w) {
              complexd ph_r = body.apply_to_basis(BitString(n, r)).phase();
              complexd ph_w = body.apply_to_basis(BitString(n, w)).phase();
              Eigen::RowVectorXcd top = u.row(r);
              // row'_r = c row_r - i s <r|sigma|w> row_w, etc.
              u.row(r) = c * top - kI * s * ph_w * u.row(w);
              u.row(w) = c * u.row(w) - kI * s * ph_r * top;
            }
          }
        } else if constexpr (std::is_same_v<T, TranspositionGate>) {
          u.row(g.x.value()).swap(u.row(g.y.value()));
        } else if constexpr (std::is_same_v<T, PermToPrefixGate>) {
          for (const auto& [x, y] : perm_to_prefix_transpositions(g.states)) {
            u.row(x.value()).swap(u.row(y.value()));
          }
        }
      },
      gate);
}

}  // namespace

DenseUnitary circuit_unitary(const Circuit& circuit, uint32_t dense_cap) {
  const uint32_t n = circuit.qubit_count();
  check_cap(n, dense_cap);
  const uint64_t dim = uint64_t{1} << n;
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  for (const auto& gate : circuit.gates()) {
    apply_gate(u, gate, n);
  }
  return u;
}

DenseUnitary exact_evolution(const PauliString& sigma, const BasisSet& basis,
                             double t, uint32_t dense_cap) {
  const uint32_t n = static_cast<uint32_t>(basis.qubit_count());
  check_cap(n, dense_cap);
  if (!commutes_with_projector(sigma, basis)) {
    throw std::invalid_argument(
        "sigma does not commute with the projector; the closed form would "
        "not be unitary");
  }
  const uint64_t dim = uint64_t{1} << n;
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  double c = std::cos(t);
  double s = std::sin(t);
  for (const auto& z : basis.states()) {
    PhasedState w = sigma.apply_to_basis(z);
    u(z.value(), z.value()) += c - 1.0;
    u(w.state.value(), z.value()) += kI * s * w.phase();
  }
  return u;
}

double verify_circuit(const PauliString& sigma, const BasisSet& basis, double t,
                      const Circuit& circuit, uint32_t dense_cap) {
  if (circuit.qubit_count() != basis.qubit_count()) {
    throw std::invalid_argument("circuit size does not match basis");
  }
  DenseUnitary u = circuit_unitary(circuit, dense_cap);
  DenseUnitary w = exact_evolution(sigma, basis, t, dense_cap);
  return (u - w).cwiseAbs().maxCoeff();
}

DenseUnitary pauli_matrix(const PauliString& sigma, uint32_t dense_cap) {
  const uint32_t n = static_cast<uint32_t>(sigma.size());
  check_cap(n, dense_cap);
  const uint64_t dim = uint64_t{1} << n;
  DenseUnitary m = DenseUnitary::Zero(dim, dim);
  for (uint64_t z = 0; z < dim; ++z) {
    PhasedState w = sigma.apply_to_basis(BitString(n, z));
    m(w.state.value(), z) = w.phase();
  }
  return m;
}

uint64_t baseline_pauli_terms(const PauliString& sigma, const BasisSet& basis) {
  const size_t n = basis.qubit_count();
  if (sigma.size() != n) {
    throw std::invalid_argument("Pauli length does not match basis");
  }
  if (n > 20) {
    throw std::invalid_argument("baseline count limited to 20 qubits");
  }
  const uint64_t dim = uint64_t{1} << n;
  std::vector<int64_t> f(dim, 0);
  for (const auto& z : basis.states()) {
    f[z.value()] = 1;
  }
  // In-place Walsh-Hadamard transform.
  for (uint64_t h = 1; h < dim; h <<= 1) {
    for (uint64_t i = 0; i < dim; i += h << 1) {
      for (uint64_t j = i; j < i + h; ++j) {
        int64_t a = f[j];
        int64_t b = f[j + h];
        f[j] = a + b;
        f[j + h] = a - b;
      }
    }
  }
  uint64_t nonzero = 0;
  for (int64_t c : f) {
    nonzero += (c != 0);
  }
  return nonzero;
}

uint64_t baseline_terms_by_parts(const PauliString& sigma,
                                 const BasisSet& basis) {
  uint64_t total = 0;
  for (const auto& part : cover_by_orbits(basis, sigma)) {
    total += baseline_pauli_terms(
        sigma, BasisSet(basis.qubit_count(), part.expand()));
  }
  return total;
}

}  // namespace projevo
