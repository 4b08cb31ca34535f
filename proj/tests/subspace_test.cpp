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

#include <doctest.h>

#include <random>
#include <set>

#include "projevo/subspace.hpp"
#include "test_util.hpp"

using namespace projevo;
using namespace projevo::testing;

namespace {

BasisSet basis_of(size_t n, std::initializer_list<const char*> states) {
  std::vector<std::string> s;
  for (const char* x : states) {
    s.emplace_back(x);
  }
  return BasisSet::from_strings(n, s);
}

Eigen::MatrixXcd projector(const BasisSet& b) {
  const uint64_t dim = uint64_t{1} << b.qubit_count();
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& z : b.states()) {
    p(z.value(), z.value()) = 1;
  }
  return p;
}

}  // namespace

TEST_CASE("basis set invariants") {
  CHECK_THROWS_AS(basis_of(2, {"00", "00"}), std::invalid_argument);
  CHECK_THROWS_AS(basis_of(2, {"000"}), std::invalid_argument);
  BasisSet b = basis_of(2, {"10", "01"});
  CHECK(b.contains(BitString::parse("10")));
  CHECK(!b.contains(BitString::parse("11")));
}

TEST_CASE("commutes_with_projector pinned") {
  CHECK(commutes_with_projector(PauliString::parse("ZZ"),
                                basis_of(2, {"01", "10"})));
  CHECK(commutes_with_projector(PauliString::parse("XI"),
                                basis_of(2, {"00", "10"})));
  CHECK(!commutes_with_projector(PauliString::parse("XI"),
                                 basis_of(2, {"00", "01"})));
}

TEST_CASE("commutes_with_projector agrees with dense commutator") {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 500) {
    size_t n = 2 + rng() % 5;
    PauliString sigma = random_pauli(rng, n);
    std::set<uint64_t> vals;
    size_t count = 1 + rng() % std::min<uint64_t>(12, uint64_t{1} << n);
    while (vals.size() < count) {
      vals.insert(rng() % (uint64_t{1} << n));
    }
    std::vector<BitString> states;
    for (uint64_t v : vals) {
      states.emplace_back(n, v);
    }
    BasisSet b(n, states);
    Eigen::MatrixXcd m = kron_pauli(sigma);
    Eigen::MatrixXcd p = projector(b);
    bool dense = max_abs_diff(m * p, p * m) < 1e-12;
    CHECK(commutes_with_projector(sigma, b) == dense);
    ++checked;
  }
}

TEST_CASE("split_by_z_eigenvalue") {
  auto [p1, m1] = split_by_z_eigenvalue(basis_of(2, {"00", "01", "10", "11"}),
                                        BitString::parse("01"));
  CHECK(p1.states() == basis_of(2, {"00", "10"}).states());
  CHECK(m1.states() == basis_of(2, {"01", "11"}).states());

  BasisSet empty(2, {});
  auto [p2, m2] = split_by_z_eigenvalue(empty, BitString::parse("01"));
  CHECK(p2.empty());
  CHECK(m2.empty());

  // Eigenvalues computed per element: (-1)^(b.z) with b = 1100.
  auto [p3, m3] = split_by_z_eigenvalue(basis_of(4, {"0101", "1110"}),
                                        BitString::parse("1100"));
  CHECK(p3.states() == basis_of(4, {"1110"}).states());
  CHECK(m3.states() == basis_of(4, {"0101"}).states());
}

TEST_CASE("pair_by_x anticommuting orders by eigenvalue") {
  PauliString sigma(BitString::parse("11"), BitString::parse("10"));
  XPairing pairing =
      pair_by_x(basis_of(2, {"00", "11", "01", "10"}), sigma);
  CHECK(pairing.anticommuting);
  REQUIRE(pairing.ordered.pairs.size() == 2);
  // First elements have Z^b eigenvalue +1 (b = 10: leading bit 0).
  CHECK(pairing.ordered.pairs[0].first.str() == "00");
  CHECK(pairing.ordered.pairs[0].second.str() == "11");
  CHECK(pairing.ordered.pairs[1].first.str() == "01");
  CHECK(pairing.ordered.pairs[1].second.str() == "10");
}

TEST_CASE("pair_by_x commuting splits by eigenvalue") {
  XPairing pairing =
      pair_by_x(basis_of(2, {"01", "10"}), PauliString::parse("XX"));
  CHECK(!pairing.anticommuting);
  REQUIRE(pairing.plus.pairs.size() == 1);
  CHECK(pairing.minus.pairs.empty());
  CHECK(pairing.plus.pairs[0].first.str() == "01");
  CHECK(pairing.plus.pairs[0].second.str() == "10");

  XPairing p2 = pair_by_x(basis_of(2, {"00", "10", "01", "11"}),
                          PauliString::parse("XI"));
  CHECK(p2.plus.pairs.size() == 2);
  CHECK(p2.minus.pairs.empty());
  CHECK(p2.plus.pairs[0].first.str() == "00");
  CHECK(p2.plus.pairs[0].second.str() == "10");
  CHECK(p2.plus.pairs[1].first.str() == "01");
  CHECK(p2.plus.pairs[1].second.str() == "11");
}

TEST_CASE("pair_by_x covers the basis exactly once") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    size_t n = 2 + rng() % 5;
    PauliString sigma = random_pauli(rng, n);
    if (sigma.x_part().none()) {
      continue;
    }
    BasisSet b = random_closed_basis(rng, sigma, 12);
    XPairing pairing = pair_by_x(b, sigma);
    std::set<uint64_t> seen;
    auto record = [&](const PairSet& ps, int expect_first_sign) {
      for (const auto& [x, y] : ps.pairs) {
        CHECK(seen.insert(x.value()).second);
        CHECK(seen.insert(y.value()).second);
        CHECK((y ^ x) == sigma.x_part());
        if (expect_first_sign != 0) {
          CHECK(sigma.z_part().dot(x) == (expect_first_sign < 0));
          CHECK(sigma.z_part().dot(y) == (expect_first_sign > 0));
        }
      }
    };
    if (pairing.anticommuting) {
      record(pairing.ordered, +1);
    } else {
      record(pairing.plus, 0);
      record(pairing.minus, 0);
    }
    CHECK(seen.size() == b.size());
  }
}

TEST_CASE("detect_orbit pinned") {
  auto orbit = detect_orbit(basis_of(4, {"0000", "1010", "0111", "1101"}));
  REQUIRE(orbit.has_value());
  CHECK(orbit->reference.str() == "0000");
  REQUIRE(orbit->generators.size() == 2);
  CHECK(orbit->generators[0].str() == "1010");
  CHECK(orbit->generators[1].str() == "0111");

  auto singleton = detect_orbit(basis_of(3, {"101"}));
  REQUIRE(singleton.has_value());
  CHECK(singleton->dimension() == 0);

  CHECK(!detect_orbit(basis_of(3, {"000", "001", "010"})).has_value());
}

TEST_CASE("detect_orbit reconstructs the set") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    size_t n = 2 + rng() % 6;
    size_t k = rng() % std::min<size_t>(n, 4);
    Gf2RowBasis rows;
    while (rows.rank() < k) {
      rows.insert(1 + rng() % ((uint64_t{1} << n) - 1));
    }
    uint64_t ref = rng() % (uint64_t{1} << n);
    std::vector<BitString> gens;
    for (uint64_t r : rows.rows()) {
      gens.emplace_back(n, r);
    }
    OrbitStructure made{BitString(n, ref), gens};
    auto states = made.expand();
    std::shuffle(states.begin(), states.end(), rng);
    BasisSet b(n, states);

    auto detected = detect_orbit(b);
    REQUIRE(detected.has_value());
    std::set<uint64_t> original, rebuilt;
    for (const auto& z : b.states()) {
      original.insert(z.value());
    }
    for (const auto& z : detected->expand()) {
      rebuilt.insert(z.value());
    }
    CHECK(original == rebuilt);
    // Canonical generators do not depend on the input order.
    std::shuffle(states.begin(), states.end(), rng);
    auto again = detect_orbit(BasisSet(n, states));
    REQUIRE(again.has_value());
    CHECK(again->generators == detected->generators);
  }
}

TEST_CASE("cover_by_orbits reproduces the worked split") {
  BasisSet b = basis_of(4, {"0000", "1000", "0100", "1100", "0010", "1010"});
  auto parts = cover_by_orbits(b, PauliString::parse("XIII"));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].reference.str() == "0000");
  REQUIRE(parts[0].generators.size() == 2);
  CHECK(parts[0].generators[0].str() == "1000");
  CHECK(parts[0].generators[1].str() == "0100");
  CHECK(parts[1].reference.str() == "0010");
  REQUIRE(parts[1].generators.size() == 1);
  CHECK(parts[1].generators[0].str() == "1000");
}

TEST_CASE("cover_by_orbits on a pair") {
  BasisSet b = basis_of(2, {"00", "11"});
  auto parts = cover_by_orbits(b, PauliString::parse("II"));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].reference.str() == "00");
  REQUIRE(parts[0].generators.size() == 1);
  CHECK(parts[0].generators[0].str() == "11");
}

TEST_CASE("cover parts are disjoint, exhaustive and sigma-closed") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 120; ++trial) {
    size_t n = 2 + rng() % 5;
    PauliString sigma = random_pauli(rng, n);
    BasisSet b = random_closed_basis(rng, sigma, 14);
    auto parts = cover_by_orbits(b, sigma);
    std::set<uint64_t> seen;
    for (const auto& part : parts) {
      auto members = part.expand();
      for (const auto& z : members) {
        CHECK(b.contains(z));
        CHECK(seen.insert(z.value()).second);
      }
      if (!sigma.x_part().none()) {
        std::set<uint64_t> vals;
        for (const auto& z : members) {
          vals.insert(z.value());
        }
        for (uint64_t v : vals) {
          CHECK(vals.count(v ^ sigma.x_part().value()));
        }
      }
    }
    CHECK(seen.size() == b.size());
  }
}
