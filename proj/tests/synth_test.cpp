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

#include <numbers>
#include <random>

#include "projevo/lowering.hpp"
#include "projevo/synth.hpp"
#include "projevo/verify.hpp"
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

size_t frame_gate_count(const Circuit& c) {
  // Gates before the first non-X/CX gate: the compression network M.
  size_t count = 0;
  for (const auto& g : c.gates()) {
    if (std::holds_alternative<XGate>(g) || std::holds_alternative<CXGate>(g)) {
      ++count;
    } else {
      break;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("orbit frame reproduces the two-generator mixer network") {
  BasisSet b = basis_of(4, {"0000", "1010", "0111", "1101"});
  auto orbit = detect_orbit(b);
  REQUIRE(orbit.has_value());
  OrbitFrame frame = build_orbit_frame(*orbit, 4);

  REQUIRE(frame.compress.size() == 3);
  CHECK(std::get<CXGate>(frame.compress.gates()[0]) == CXGate{0, 2});
  CHECK(std::get<CXGate>(frame.compress.gates()[1]) == CXGate{1, 2});
  CHECK(std::get<CXGate>(frame.compress.gates()[2]) == CXGate{1, 3});
  CHECK(frame.residual_word.str() == "0000");
  CHECK(frame.residual_controls() ==
        ControlSpec{Control{2, false}, Control{3, false}});
}

TEST_CASE("shared-frame mixer emits one RX per generator") {
  BasisSet b = basis_of(4, {"0000", "1010", "0111", "1101"});
  auto orbit = detect_orbit(b);
  REQUIRE(orbit.has_value());
  std::vector<std::pair<PauliString, double>> terms = {
      {PauliString::parse("XIXI"), 0.3}, {PauliString::parse("IXXX"), 0.4}};
  Circuit c = synth_orbit_multi(terms, *orbit);

  // 3 CX in, two doubly-open-controlled RX, 3 CX out.
  REQUIRE(c.size() == 8);
  const auto& r1 = std::get<RotationGate>(c.gates()[3]);
  const auto& r2 = std::get<RotationGate>(c.gates()[4]);
  CHECK(r1.axis == RotationAxis::X);
  CHECK(r1.target == 0);
  CHECK(r1.controls == ControlSpec{Control{2, false}, Control{3, false}});
  CHECK(r2.axis == RotationAxis::X);
  CHECK(r2.target == 1);
  CHECK(r2.controls == ControlSpec{Control{2, false}, Control{3, false}});

  // The product of the per-term closed forms is the oracle.
  DenseUnitary expect =
      exact_evolution(terms[1].first, b, terms[1].second) *
      exact_evolution(terms[0].first, b, terms[0].second);
  CHECK(max_abs_diff(circuit_unitary(c), expect) < 1e-12);
}

TEST_CASE("singleton orbit with diagonal sigma is a controlled phase") {
  BasisSet b = basis_of(3, {"101"});
  auto orbit = detect_orbit(b);
  REQUIRE(orbit.has_value());
  Circuit c = synth_orbit(PauliString::parse("ZIZ"), *orbit, 0.77);
  REQUIRE(c.size() == 1);
  const auto& phase = std::get<PhaseGate>(c.gates()[0]);
  // Pattern is the state itself; Z^b eigenvalue of |101> is +1.
  CHECK(phase.controls == ControlSpec{Control{0, true}, Control{1, false},
                                      Control{2, true}});
  CHECK(phase.angle == doctest::Approx(0.77));
  CHECK(verify_circuit(PauliString::parse("ZIZ"), b, 0.77, c) < 1e-12);
}

TEST_CASE("orbit path handles diagonal sigma with nonconstant sign") {
  // Z on a qubit toggled by the generator: sigma_hat becomes a Z-rotation.
  BasisSet b = basis_of(2, {"00", "10"});
  auto orbit = detect_orbit(b);
  REQUIRE(orbit.has_value());
  Circuit c = synth_orbit(PauliString::parse("ZI"), *orbit, 0.6);
  REQUIRE(c.size() == 1);
  const auto& rot = std::get<RotationGate>(c.gates()[0]);
  CHECK(rot.axis == RotationAxis::Z);
  CHECK(rot.target == 0);
  CHECK(verify_circuit(PauliString::parse("ZI"), b, 0.6, c) < 1e-12);
}

TEST_CASE("orbit gate-count bound") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    size_t n = 2 + rng() % 9;  // up to 10 qubits
    size_t k = 1 + rng() % std::min<size_t>(n, 5);
    Gf2RowBasis rows;
    while (rows.rank() < k) {
      rows.insert(1 + rng() % ((uint64_t{1} << n) - 1));
    }
    std::vector<BitString> gens;
    for (uint64_t r : rows.rows()) {
      gens.emplace_back(n, r);
    }
    OrbitStructure orbit{BitString(n, rng() % (uint64_t{1} << n)), gens};

    OrbitFrame frame = build_orbit_frame(orbit, n);
    CHECK(frame.compress.size() <= n * k - k * (k - 1) / 2);

    // Every coset element compresses into pivot-register states over one
    // residual word.
    for (const auto& z : orbit.expand()) {
      BitString image = apply_permutation_circuit(frame.compress, z);
      CHECK((image.value() & ~frame.pivot_mask) ==
            (frame.residual_word.value() & ~frame.pivot_mask));
    }
  }
}

TEST_CASE("general case: identity sigma on a prefix is just the phase") {
  BasisSet b = basis_of(3, {"000", "001", "010"});
  SynthesisCase kind;
  Circuit c = synth_general(PauliString::parse("III"), b, 0.5, &kind);
  CHECK(kind == SynthesisCase::identity);
  // M is empty, leaving only the low-pass phase; K = 3 takes the inverse
  // form (a global phase plus two counter-phases needs fewer controls).
  REQUIRE(c.size() == 3);
  CHECK(std::holds_alternative<GlobalPhaseGate>(c.gates()[0]));
  CHECK(std::holds_alternative<PhaseGate>(c.gates()[1]));
  CHECK(std::holds_alternative<PhaseGate>(c.gates()[2]));
  CHECK(verify_circuit(PauliString::parse("III"), b, 0.5, c) < 1e-12);
}

TEST_CASE("general case pins the four dispatch labels") {
  SynthesisCase kind;
  BasisSet full1 = basis_of(1, {"0", "1"});

  synth_general(PauliString::parse("I"), full1, 0.3, &kind);
  CHECK(kind == SynthesisCase::identity);
  synth_general(PauliString::parse("Z"), full1, 0.3, &kind);
  CHECK(kind == SynthesisCase::diagonal);
  synth_general(PauliString::parse("Y"), full1, 0.3, &kind);
  CHECK(kind == SynthesisCase::anticommuting);
  synth_general(PauliString::parse("X"), full1, 0.3, &kind);
  CHECK(kind == SynthesisCase::commuting);
}

TEST_CASE("single-qubit general circuits match closed forms exactly") {
  BasisSet full = basis_of(1, {"0", "1"});
  for (const char* letter : {"I", "Z", "X", "Y"}) {
    for (double t : {0.0, 0.4, -1.3, std::numbers::pi / 2}) {
      PauliString sigma = PauliString::parse(letter);
      Circuit c = synth_general(sigma, full, t);
      CHECK(verify_circuit(sigma, full, t, c) < 1e-12);
    }
  }
}

TEST_CASE("general path on the six-state mixer instance") {
  BasisSet b = basis_of(4, {"0000", "1000", "0100", "1100", "0010", "1010"});
  PauliString sigma = PauliString::parse("XIII");
  SynthesisCase kind;
  Circuit c = synth_general(sigma, b, 0.9, &kind);
  CHECK(kind == SynthesisCase::commuting);
  CHECK(verify_circuit(sigma, b, 0.9, c) < 1e-10);

  // All three pairs share eigenvalue +1, so a single low-pass block with
  // K = 3 appears; its inverse form spends one uncontrolled and two
  // controlled RX rotations, all on the last qubit.
  size_t rotations = 0;
  for (const auto& g : lower_macros(c).gates()) {
    if (const auto* r = std::get_if<RotationGate>(&g)) {
      ++rotations;
      CHECK(r->target == 3);
      CHECK(r->axis == RotationAxis::X);
    }
  }
  CHECK(rotations == 3);
}

TEST_CASE("auto strategy picks the expected route") {
  SynthesisOptions options;

  // A single orbit goes down the fast path.
  auto orbit_report =
      synthesize(PauliString::parse("XIXI"),
                 basis_of(4, {"0000", "1010", "0111", "1101"}), 0.4, options);
  CHECK(orbit_report.kind == SynthesisCase::orbit);
  REQUIRE(orbit_report.verification_residual.has_value());
  CHECK(*orbit_report.verification_residual < 1e-10);

  // The six-state mixer set covers into two orbit parts.
  auto cover_report =
      synthesize(PauliString::parse("XIII"),
                 basis_of(4, {"0000", "1000", "0100", "1100", "0010", "1010"}),
                 0.4, options);
  CHECK(cover_report.kind == SynthesisCase::orbit_cover);
  CHECK(*cover_report.verification_residual < 1e-10);

  // Two rotations in the cover circuit: one per part.
  size_t rotations = 0;
  for (const auto& g : cover_report.circuit.gates()) {
    rotations += std::holds_alternative<RotationGate>(g);
  }
  CHECK(rotations == 2);

  // Diagonal sigma, nonuniform on the orbit: auto falls back to general.
  auto diag_report = synthesize(PauliString::parse("ZI"),
                                basis_of(2, {"00", "10"}), 0.4, options);
  CHECK(diag_report.kind == SynthesisCase::diagonal);
  CHECK(*diag_report.verification_residual < 1e-10);

  // Three scattered states: no orbit, no useful cover.
  auto general_report = synthesize(PauliString::parse("III"),
                                   basis_of(3, {"000", "011", "101"}),
                                   0.4, options);
  CHECK(general_report.kind == SynthesisCase::identity);
  CHECK(*general_report.verification_residual < 1e-10);
}

TEST_CASE("synthesize rejects bad inputs") {
  SynthesisOptions options;
  CHECK_THROWS_AS(synthesize(PauliString::parse("XI"),
                             basis_of(2, {"00", "01"}), 0.4, options),
                  CommutationError);
  try {
    synthesize(PauliString::parse("XI"), basis_of(2, {"00", "01"}), 0.4,
               options);
  } catch (const CommutationError& e) {
    CHECK(std::string(e.what()).find("00") != std::string::npos);
  }

  options.strategy = Strategy::orbit;
  CHECK_THROWS_AS(synthesize(PauliString::parse("III"),
                             basis_of(3, {"000", "001", "010"}), 0.4, options),
                  std::invalid_argument);
}

TEST_CASE("empty basis gives an identity circuit and a warning") {
  SynthesisReport report =
      synthesize(PauliString::parse("XY"), BasisSet(2, {}), 0.8, {});
  CHECK(report.kind == SynthesisCase::identity);
  CHECK(report.circuit.empty());
  CHECK(!report.warnings.empty());
  REQUIRE(report.verification_residual.has_value());
  CHECK(*report.verification_residual == 0.0);
}

TEST_CASE("full-space basis reduces to the plain Pauli evolution") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    size_t n = 1 + rng() % 3;
    PauliString sigma = random_pauli(rng, n);
    std::vector<BitString> all;
    for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
      all.emplace_back(n, v);
    }
    BasisSet b(n, all);
    double t = std::uniform_real_distribution<double>(-3, 3)(rng);
    for (Strategy s : {Strategy::automatic, Strategy::general}) {
      SynthesisOptions options;
      options.strategy = s;
      auto report = synthesize(sigma, b, t, options);
      REQUIRE(report.verification_residual.has_value());
      CHECK(*report.verification_residual < 1e-10);
    }
  }
}

TEST_CASE("randomized exactness across strategies") {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> tdist(-std::numbers::pi,
                                               std::numbers::pi);
  int done = 0;
  while (done < 150) {
    size_t n = 2 + rng() % 5;  // up to n = 6 here; acceptance goes to 8
    PauliString sigma = random_pauli(rng, n);
    if (rng() % 2) {
      sigma = sigma.with_sign(-1);
    }
    BasisSet b = random_closed_basis(rng, sigma, 12);
    double t = tdist(rng);

    std::vector<Strategy> strategies = {Strategy::automatic, Strategy::general,
                                        Strategy::cover};
    if (detect_orbit(b)) {
      strategies.push_back(Strategy::orbit);
    }
    for (Strategy s : strategies) {
      SynthesisOptions options;
      options.strategy = s;
      auto report = synthesize(sigma, b, t, options);
      REQUIRE(report.verification_residual.has_value());
      CAPTURE(sigma.str());
      CAPTURE(t);
      CAPTURE(to_string(s));
      CHECK(*report.verification_residual <= 1e-9);
    }
    ++done;
  }
}

TEST_CASE("general-path transposition budget") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 60; ++trial) {
    size_t n = 2 + rng() % 5;
    PauliString sigma = random_pauli(rng, n);
    BasisSet b = random_closed_basis(rng, sigma, 12);
    Circuit c = synth_general(sigma, b, 0.8);
    size_t macros = 0;
    for (const auto& g : c.gates()) {
      macros += std::holds_alternative<TranspositionGate>(g);
    }
    // M and its adjoint each spend at most |B| transpositions.
    CHECK(macros <= 2 * b.size());
    CHECK(macros % 2 == 0);
  }
}

TEST_CASE("group law U(t1) U(t2) = U(t1 + t2)") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    size_t n = 2 + rng() % 5;
    PauliString sigma = random_pauli(rng, n);
    BasisSet b = random_closed_basis(rng, sigma, 10);
    double t1 = std::uniform_real_distribution<double>(-1.5, 1.5)(rng);
    double t2 = std::uniform_real_distribution<double>(-1.5, 1.5)(rng);
    SynthesisOptions options;
    options.verify = false;
    DenseUnitary u1 = circuit_unitary(synthesize(sigma, b, t1, options).circuit);
    DenseUnitary u2 = circuit_unitary(synthesize(sigma, b, t2, options).circuit);
    DenseUnitary u12 =
        circuit_unitary(synthesize(sigma, b, t1 + t2, options).circuit);
    CHECK(max_abs_diff(u2 * u1, u12) < 1e-9);
  }
}

TEST_CASE("cover factors commute: part order does not matter") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 30; ++trial) {
    size_t n = 2 + rng() % 4;
    PauliString sigma = random_pauli(rng, n).with_sign(1);
    BasisSet b = random_closed_basis(rng, sigma, 12);
    double t = std::uniform_real_distribution<double>(-2, 2)(rng);

    auto parts = cover_by_orbits(b, sigma);
    DenseUnitary forward = DenseUnitary::Identity(1 << n, 1 << n);
    DenseUnitary backward = forward;
    for (size_t i = 0; i < parts.size(); ++i) {
      forward =
          circuit_unitary(synth_orbit(sigma, parts[i], t)) * forward;
      backward = circuit_unitary(synth_orbit(
                     sigma, parts[parts.size() - 1 - i], t)) *
                 backward;
    }
    CHECK(max_abs_diff(forward, backward) < 1e-10);
    CHECK(max_abs_diff(forward, exact_evolution(sigma, b, t)) < 1e-10);
  }
}

TEST_CASE("negative-sign sigma folds into the angle") {
  BasisSet b = basis_of(2, {"01", "10"});
  PauliString plus = PauliString::parse("XX");
  PauliString minus = PauliString::parse("-XX");
  SynthesisOptions options;
  options.verify = false;
  DenseUnitary u_minus =
      circuit_unitary(synthesize(minus, b, 0.7, options).circuit);
  DenseUnitary u_plus =
      circuit_unitary(synthesize(plus, b, -0.7, options).circuit);
  CHECK(max_abs_diff(u_minus, u_plus) < 1e-12);
  CHECK(max_abs_diff(u_minus, exact_evolution(minus, b, 0.7)) < 1e-12);
}
