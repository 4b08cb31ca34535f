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

#include "projevo/examples.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace projevo {

namespace {

std::string join(const std::vector<uint32_t>& values) {
  std::string s;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) {
      s += ",";
    }
    s += std::to_string(values[i]);
  }
  return s;
}

// Z-chain strictly between two indices.
uint64_t jw_chain_mask(uint32_t i, uint32_t k, uint32_t n) {
  uint32_t lo = std::min(i, k);
  uint32_t hi = std::max(i, k);
  uint64_t mask = 0;
  for (uint32_t q = lo + 1; q < hi; ++q) {
    mask |= uint64_t{1} << (n - 1 - q);
  }
  return mask;
}

}  // namespace

ExampleSpec qubit_excitation(size_t n_exc, std::vector<uint32_t> occupied,
                             std::vector<uint32_t> virtuals,
                             uint32_t total_qubits, double t,
                             bool jordan_wigner) {
  if (n_exc == 0 || occupied.size() != n_exc || virtuals.size() != n_exc) {
    throw std::invalid_argument("index lists must have length n_exc");
  }
  std::set<uint32_t> seen;
  for (uint32_t q : occupied) {
    seen.insert(q);
  }
  for (uint32_t q : virtuals) {
    if (!seen.insert(q).second) {
      throw std::invalid_argument("occupied and virtual indices overlap");
    }
  }
  for (uint32_t q : seen) {
    if (q >= total_qubits) {
      throw std::invalid_argument("excitation index out of range");
    }
  }

  const uint32_t n = total_qubits;
  uint64_t occ_mask = 0;
  uint64_t virt_mask = 0;
  for (uint32_t q : occupied) {
    occ_mask |= uint64_t{1} << (n - 1 - q);
  }
  for (uint32_t q : virtuals) {
    virt_mask |= uint64_t{1} << (n - 1 - q);
  }

  uint64_t z_mask = uint64_t{1} << (n - 1 - occupied.front());
  if (jordan_wigner) {
    for (size_t j = 0; j < n_exc; ++j) {
      z_mask ^= jw_chain_mask(occupied[j], virtuals[j], n);
    }
  }

  PauliString sigma(BitString(n, occ_mask | virt_mask), BitString(n, z_mask));
  BasisSet basis(n, {BitString(n, occ_mask), BitString(n, virt_mask)});

  ExampleSpec spec;
  spec.name = jordan_wigner ? "fermionic_excitation" : "qubit_excitation";
  spec.parameters = {{"n_exc", std::to_string(n_exc)},
                     {"occupied", join(occupied)},
                     {"virtual", join(virtuals)},
                     {"total_qubits", std::to_string(total_qubits)}};
  spec.terms.push_back(ExampleTerm{sigma, basis, t});
  return spec;
}

ExampleSpec trace_gate_spec(uint32_t n, double t) {
  if (n < 2) {
    throw std::invalid_argument("trace gate requires n >= 2");
  }
  if (n > 30) {
    throw std::invalid_argument("trace gate limited to n <= 30");
  }
  const uint32_t width = n + 1;  // leading control qubit
  const uint64_t block = uint64_t{1} << n;

  ExampleSpec spec;
  spec.name = "trace_gate";
  spec.parameters = {{"n", std::to_string(n)}};

  auto embedded = [&](uint64_t state_in_block) {
    return BitString(width, state_in_block);  // leading qubit 0
  };

  // Boundary term: Z on the top block qubit, remaining block qubits at 0.
  {
    PauliString sigma(BitString::zeros(width),
                      BitString(width, uint64_t{1} << (n - 1)));
    BasisSet basis(width, {embedded(0), embedded(block >> 1)});
    spec.terms.push_back(ExampleTerm{sigma, basis, t});
  }

  // One 4-state orbit per cosine value.
  const uint64_t zz_mask =
      (uint64_t{1} << (n - 1)) | (uint64_t{1} << (n - 2));
  for (uint64_t k = 1; k < (block >> 2); ++k) {
    PauliString sigma(BitString::zeros(width), BitString(width, zz_mask));
    BasisSet basis(width, {embedded(k), embedded((block >> 1) - k),
                           embedded((block >> 1) + k), embedded(block - k)});
    double angle = t * std::cos(2 * std::numbers::pi *
                                static_cast<double>(k) /
                                static_cast<double>(block));
    spec.terms.push_back(ExampleTerm{sigma, basis, angle});
  }
  return spec;
}

Circuit trace_gate(uint32_t n, double t) {
  return synthesize_example_circuit(trace_gate_spec(n, t), Strategy::orbit);
}

ExampleSpec maxkcut_oracle(uint32_t k,
                           const std::vector<std::pair<uint32_t, uint32_t>>&
                               equivalent_colors,
                           double t) {
  if (k < 2) {
    throw std::invalid_argument("MAX k-CUT requires k >= 2");
  }
  uint32_t bits = 1;
  while ((uint32_t{1} << bits) < k) {
    ++bits;
  }
  const uint32_t n = 2 * bits;
  std::vector<BitString> states;
  for (const auto& [i, j] : equivalent_colors) {
    if (i >= (uint32_t{1} << bits) || j >= (uint32_t{1} << bits)) {
      throw std::invalid_argument("color index out of range");
    }
    states.emplace_back(n, (uint64_t{i} << bits) | j);
  }

  ExampleSpec spec;
  spec.name = "maxkcut_oracle";
  spec.parameters = {{"k", std::to_string(k)},
                     {"color_bits", std::to_string(bits)}};
  spec.terms.push_back(
      ExampleTerm{PauliString::identity(n), BasisSet(n, std::move(states)), t});
  return spec;
}

ExampleSpec lx_mixer(const BasisSet& basis,
                     const std::vector<PauliString>& generators,
                     const std::vector<double>& angles) {
  if (generators.size() != angles.size()) {
    throw std::invalid_argument("one angle per generator required");
  }
  if (generators.empty()) {
    throw std::invalid_argument("no mixer generators");
  }
  ExampleSpec spec;
  spec.name = "lx_mixer";
  spec.parameters = {{"generators", std::to_string(generators.size())}};

  for (size_t i = 0; i < generators.size(); ++i) {
    const PauliString& g = generators[i];
    if (g.size() != basis.qubit_count() || g.x_part().none()) {
      throw std::invalid_argument("mixer generator must have an X-part");
    }
    std::vector<BitString> paired;
    for (const auto& z : basis.states()) {
      if (basis.contains(z ^ g.x_part())) {
        paired.push_back(z);
      }
    }
    if (paired.empty()) {
      throw std::invalid_argument("generator " + g.str() +
                                  " mixes no states of B");
    }
    spec.terms.push_back(ExampleTerm{
        g, BasisSet(basis.qubit_count(), std::move(paired)), angles[i]});
  }
  return spec;
}

Circuit synthesize_example_circuit(const ExampleSpec& spec, Strategy strategy) {
  if (spec.terms.empty()) {
    throw std::invalid_argument("example has no terms");
  }
  const uint32_t n = static_cast<uint32_t>(spec.terms[0].basis.qubit_count());

  // Shared-frame fast path: several terms on one common orbit.
  if (spec.terms.size() > 1 &&
      (strategy == Strategy::automatic || strategy == Strategy::orbit)) {
    bool same_basis = std::all_of(
        spec.terms.begin(), spec.terms.end(),
        [&](const ExampleTerm& term) { return term.basis == spec.terms[0].basis; });
    if (same_basis) {
      if (auto orbit = detect_orbit(spec.terms[0].basis)) {
        bool commuting = true;
        std::vector<std::pair<PauliString, double>> terms;
        for (const auto& term : spec.terms) {
          if (commutation_witness(term.sigma, term.basis)) {
            commuting = false;
            break;
          }
          terms.emplace_back(term.sigma, term.angle);
        }
        if (commuting) {
          return synth_orbit_multi(terms, *orbit);
        }
      }
    }
  }

  Circuit out(n);
  SynthesisOptions options;
  options.strategy = strategy;
  options.verify = false;
  for (const auto& term : spec.terms) {
    out.extend(synthesize(term.sigma, term.basis, term.angle, options).circuit);
  }
  return out;
}

DenseUnitary composite_oracle(const ExampleSpec& spec, uint32_t dense_cap) {
  if (spec.terms.empty()) {
    throw std::invalid_argument("example has no terms");
  }
  const uint64_t dim = uint64_t{1} << spec.terms[0].basis.qubit_count();
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  for (const auto& term : spec.terms) {
    u = exact_evolution(term.sigma, term.basis, term.angle, dense_cap) * u;
  }
  return u;
}

}  // namespace projevo
