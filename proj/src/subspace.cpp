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

#include "projevo/subspace.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace projevo {

namespace {

uint64_t top_bit(uint64_t v) {
  return uint64_t{1} << (63 - std::countl_zero(v));
}

void check_lengths(const PauliString& sigma, const BasisSet& basis) {
  if (sigma.size() != basis.qubit_count()) {
    throw std::invalid_argument("Pauli length does not match basis");
  }
}

}  // namespace

uint64_t Gf2RowBasis::reduce(uint64_t v) const {
  for (uint64_t row : rows_) {
    if (v & top_bit(row)) {
      v ^= row;
    }
  }
  return v;
}

bool Gf2RowBasis::insert(uint64_t v) {
  v = reduce(v);
  if (v == 0) {
    return false;
  }
  uint64_t pivot = top_bit(v);
  for (uint64_t& row : rows_) {
    if (row & pivot) {
      row ^= v;
    }
  }
  rows_.push_back(v);
  std::sort(rows_.begin(), rows_.end(), std::greater<>());
  return true;
}

bool commutes_with_projector(const PauliString& sigma, const BasisSet& basis) {
  check_lengths(sigma, basis);
  if (sigma.is_diagonal()) {
    return true;
  }
  for (const auto& z : basis.states()) {
    if (!basis.contains(z ^ sigma.x_part())) {
      return false;
    }
  }
  return true;
}

std::pair<BasisSet, BasisSet> split_by_z_eigenvalue(const BasisSet& basis,
                                                    const BitString& z_mask) {
  if (z_mask.size() != basis.qubit_count()) {
    throw std::invalid_argument("Z-mask length does not match basis");
  }
  std::vector<BitString> plus, minus;
  for (const auto& z : basis.states()) {
    (z_mask.dot(z) ? minus : plus).push_back(z);
  }
  return {BasisSet(basis.qubit_count(), std::move(plus)),
          BasisSet(basis.qubit_count(), std::move(minus))};
}

XPairing pair_by_x(const BasisSet& basis, const PauliString& sigma) {
  check_lengths(sigma, basis);
  if (sigma.x_part().none()) {
    throw std::invalid_argument("pair_by_x requires a nontrivial X-part");
  }
  if (!commutes_with_projector(sigma, basis)) {
    throw std::invalid_argument("sigma does not commute with the projector");
  }
  const BitString& a = sigma.x_part();
  const BitString& b = sigma.z_part();

  XPairing out;
  out.anticommuting = a.dot(b);
  out.ordered.ordered = out.anticommuting;

  std::unordered_set<uint64_t> used;
  for (const auto& z : basis.states()) {
    if (used.count(z.value())) {
      continue;
    }
    BitString partner = z ^ a;
    used.insert(z.value());
    used.insert(partner.value());
    bool z_plus = !b.dot(z);
    if (out.anticommuting) {
      // The two members have opposite eigenvalues; the +1 state goes first.
      if (z_plus) {
        out.ordered.pairs.emplace_back(z, partner);
      } else {
        out.ordered.pairs.emplace_back(partner, z);
      }
    } else {
      (z_plus ? out.plus : out.minus).pairs.emplace_back(z, partner);
    }
  }
  return out;
}

std::optional<OrbitStructure> detect_orbit(const BasisSet& basis) {
  if (basis.empty()) {
    throw std::invalid_argument("detect_orbit requires a nonempty basis");
  }
  if (!std::has_single_bit(basis.size())) {
    return std::nullopt;
  }
  size_t k = std::bit_width(basis.size()) - 1;
  const BitString& reference = basis[0];
  Gf2RowBasis rows;
  for (const auto& z : basis.states()) {
    rows.insert((z ^ reference).value());
  }
  if (rows.rank() != k) {
    return std::nullopt;
  }
  std::vector<BitString> generators;
  generators.reserve(k);
  for (uint64_t row : rows.rows()) {
    generators.emplace_back(basis.qubit_count(), row);
  }
  return OrbitStructure{reference, std::move(generators)};
}

std::vector<OrbitStructure> cover_by_orbits(const BasisSet& basis,
                                            const PauliString& sigma) {
  check_lengths(sigma, basis);
  if (!commutes_with_projector(sigma, basis)) {
    throw std::invalid_argument("sigma does not commute with the projector");
  }
  const uint64_t a = sigma.x_part().value();
  const size_t n = basis.qubit_count();

  std::set<uint64_t> remaining;
  for (const auto& z : basis.states()) {
    remaining.insert(z.value());
  }

  std::vector<OrbitStructure> parts;
  while (!remaining.empty()) {
    uint64_t ref = *remaining.begin();
    Gf2RowBasis rows;
    std::vector<uint64_t> span{0};
    auto grow = [&](uint64_t d) {
      size_t m = span.size();
      for (size_t i = 0; i < m; ++i) {
        span.push_back(span[i] ^ d);
      }
      rows.insert(d);
    };
    if (a != 0) {
      // sigma-invariance of a coset means the X-part lies in its span.
      grow(a);
    }

    // Candidate difference vectors, largest first; this reproduces the
    // worked splits the greedy is calibrated against.
    std::vector<uint64_t> candidates;
    for (auto it = remaining.rbegin(); it != remaining.rend(); ++it) {
      if (*it != ref) {
        candidates.push_back(*it ^ ref);
      }
    }
    std::sort(candidates.begin(), candidates.end(), std::greater<>());

    for (uint64_t d : candidates) {
      if (rows.in_span(d)) {
        continue;
      }
      bool fits = true;
      for (uint64_t v : span) {
        if (!remaining.count(ref ^ v ^ d)) {
          fits = false;
          break;
        }
      }
      if (fits) {
        grow(d);
      }
    }

    std::vector<BitString> generators;
    for (uint64_t row : rows.rows()) {
      generators.emplace_back(n, row);
    }
    for (uint64_t v : span) {
      remaining.erase(ref ^ v);
    }
    parts.push_back(OrbitStructure{BitString(n, ref), std::move(generators)});
  }

  // Order parts by first occurrence in B.
  std::vector<std::pair<size_t, size_t>> order;  // (first index in B, part)
  for (size_t p = 0; p < parts.size(); ++p) {
    std::unordered_set<uint64_t> members;
    for (const auto& z : parts[p].expand()) {
      members.insert(z.value());
    }
    for (size_t i = 0; i < basis.size(); ++i) {
      if (members.count(basis[i].value())) {
        order.emplace_back(i, p);
        break;
      }
    }
  }
  std::sort(order.begin(), order.end());
  std::vector<OrbitStructure> sorted;
  sorted.reserve(parts.size());
  for (const auto& [_, p] : order) {
    sorted.push_back(std::move(parts[p]));
  }
  return sorted;
}

}  // namespace projevo
