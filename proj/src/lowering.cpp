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

#include "projevo/lowering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace projevo {

namespace {

struct RoundedEdge {
  int round;
  uint32_t control;
  uint32_t target;
};

// Splits the range in half; the half holding the root keeps it, the other
// half gets a fresh root at its far end, fed by one CX.
void cover_range(const std::vector<size_t>& s, size_t lo, size_t hi,
                 bool root_left, int round, std::vector<RoundedEdge>& edges) {
  if (lo >= hi) {
    return;
  }
  size_t mid = (lo + hi) / 2;
  if (root_left) {
    edges.push_back({round, static_cast<uint32_t>(s[lo]),
                     static_cast<uint32_t>(s[hi])});
    cover_range(s, lo, mid, true, round + 1, edges);
    cover_range(s, mid + 1, hi, false, round + 1, edges);
  } else {
    edges.push_back({round, static_cast<uint32_t>(s[hi]),
                     static_cast<uint32_t>(s[lo])});
    cover_range(s, mid + 1, hi, false, round + 1, edges);
    cover_range(s, lo, mid, true, round + 1, edges);
  }
}

}  // namespace

std::vector<CXGate> fanout_compress_edges(const std::vector<size_t>& support) {
  std::vector<RoundedEdge> edges;
  if (support.size() > 1) {
    cover_range(support, 0, support.size() - 1, true, 1, edges);
  }
  // Deepest rounds first so every control still carries its original bit.
  std::sort(edges.begin(), edges.end(), [](const RoundedEdge& a,
                                           const RoundedEdge& b) {
    return std::tie(b.round, a.control, a.target) <
           std::tie(a.round, b.control, b.target);
  });
  std::vector<CXGate> out;
  out.reserve(edges.size());
  for (const auto& e : edges) {
    out.push_back(CXGate{e.control, e.target});
  }
  return out;
}

Circuit lower_transposition(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("transposition state lengths differ");
  }
  if (x == y) {
    throw std::invalid_argument("transposition of a state with itself");
  }
  const uint32_t n = static_cast<uint32_t>(x.size());
  Circuit circuit(n);

  BitString d = x ^ y;
  std::vector<size_t> support = d.support();
  uint32_t pivot = static_cast<uint32_t>(support.front());

  Circuit prefix(n);
  for (size_t q : x.support()) {
    prefix.append(XGate{static_cast<uint32_t>(q)});
  }
  for (const auto& edge : fanout_compress_edges(support)) {
    prefix.append(edge);
  }

  circuit.extend(prefix);
  if (n == 1) {
    circuit.append(XGate{pivot});
  } else {
    BitString image = apply_permutation_circuit(prefix, x);
    ControlSpec controls;
    for (uint32_t q = 0; q < n; ++q) {
      if (q != pivot) {
        controls.push_back(Control{q, image.bit(q)});
      }
    }
    circuit.append(MCXGate{std::move(controls), pivot});
  }
  circuit.extend(adjoint(prefix));
  return circuit;
}

std::vector<std::pair<BitString, BitString>> perm_to_prefix_transpositions(
    const std::vector<BitString>& states) {
  if (states.empty()) {
    throw std::invalid_argument("empty permutation");
  }
  const size_t n = states[0].size();
  std::unordered_map<uint64_t, uint64_t> image;  // original value -> current
  for (const auto& z : states) {
    image.emplace(z.value(), z.value());
  }
  std::vector<std::pair<BitString, BitString>> swaps;
  for (size_t j = 0; j < states.size(); ++j) {
    uint64_t pos = image.at(states[j].value());
    if (pos == j) {
      continue;
    }
    swaps.emplace_back(BitString(n, j), BitString(n, pos));
    for (auto& [orig, cur] : image) {
      if (cur == j) {
        cur = pos;
      } else if (cur == pos) {
        cur = j;
      }
    }
  }
  return swaps;
}

Circuit lower_perm_to_prefix(const BasisSet& basis) {
  if (basis.empty()) {
    throw std::invalid_argument("empty basis");
  }
  Circuit circuit(static_cast<uint32_t>(basis.qubit_count()));
  for (const auto& [x, y] : perm_to_prefix_transpositions(basis.states())) {
    circuit.extend(lower_transposition(x, y));
  }
  return circuit;
}

Circuit lower_pauli_rotation(const PauliRotationGate& gate, uint32_t n) {
  const PauliString& sigma = gate.pauli;
  if (sigma.size() != n) {
    throw std::invalid_argument("Pauli length does not match circuit");
  }
  if (sigma.x_part().none() && sigma.z_part().none()) {
    throw std::invalid_argument("identity Pauli rotation");
  }
  double angle = sigma.sign() < 0 ? -gate.angle : gate.angle;

  constexpr double half_pi = std::numbers::pi / 2;
  Circuit change(n);
  std::vector<size_t> support;
  for (uint32_t q = 0; q < n; ++q) {
    bool a = sigma.x_part().bit(q);
    bool b = sigma.z_part().bit(q);
    if (!a && !b) {
      continue;
    }
    support.push_back(q);
    if (a && b) {
      change.append(RotationGate{RotationAxis::X, half_pi, {}, q});
    } else if (a) {
      change.append(RotationGate{RotationAxis::Y, -half_pi, {}, q});
    }
  }

  Circuit chain(n);
  for (size_t i = 0; i + 1 < support.size(); ++i) {
    chain.append(CXGate{static_cast<uint32_t>(support[i]),
                        static_cast<uint32_t>(support[i + 1])});
  }

  Circuit out(n);
  out.extend(change);
  out.extend(chain);
  out.append(RotationGate{RotationAxis::Z, angle, gate.controls,
                          static_cast<uint32_t>(support.back())});
  out.extend(adjoint(chain));
  out.extend(adjoint(change));
  return out;
}

Circuit lower_macros(const Circuit& circuit) {
  Circuit out(circuit.qubit_count());
  for (const auto& gate : circuit.gates()) {
    if (const auto* t = std::get_if<TranspositionGate>(&gate)) {
      out.extend(lower_transposition(t->x, t->y));
    } else if (const auto* p = std::get_if<PermToPrefixGate>(&gate)) {
      for (const auto& [x, y] : perm_to_prefix_transpositions(p->states)) {
        out.extend(lower_transposition(x, y));
      }
    } else {
      out.append(gate);
    }
  }
  return out;
}

Circuit lower_full(const Circuit& circuit) {
  Circuit expanded = lower_macros(circuit);
  Circuit out(circuit.qubit_count());
  for (const auto& gate : expanded.gates()) {
    if (const auto* pr = std::get_if<PauliRotationGate>(&gate)) {
      out.extend(lower_pauli_rotation(*pr, circuit.qubit_count()));
    } else {
      out.append(gate);
    }
  }
  return out;
}

}  // namespace projevo
