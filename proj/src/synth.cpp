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

#include "projevo/synth.hpp"

#include <bit>
#include <stdexcept>

#include "projevo/lowering.hpp"
#include "projevo/verify.hpp"

namespace projevo {

namespace {

uint64_t qubit_bit(uint32_t q, uint32_t n) { return uint64_t{1} << (n - 1 - q); }

int dot_mod4_masks(uint64_t a, uint64_t b) {
  return std::popcount(a & b) % 4;
}

// Appends the transposition macros sending the j-th listed state to |j>.
Circuit prefix_permutation(uint32_t n, const std::vector<BitString>& states) {
  Circuit m(n);
  for (const auto& [x, y] : perm_to_prefix_transpositions(states)) {
    m.append(TranspositionGate{x, y});
  }
  return m;
}

void append_conjugated(Circuit& out, const Circuit& m, const Circuit& inner) {
  out.extend(m);
  out.extend(inner);
  out.extend(adjoint(m));
}

// Phase of sigma on the first element of each pair, asserted uniform.
int uniform_pair_phase(const PauliString& sigma, const PairSet& pairs) {
  int exponent = -1;
  for (const auto& [x, y] : pairs.pairs) {
    PhasedState image = sigma.apply_to_basis(x);
    if (image.state != y) {
      throw std::logic_error("pair image mismatch in synthesis");
    }
    if (exponent == -1) {
      exponent = image.phase_exponent;
    } else if (exponent != image.phase_exponent) {
      throw std::logic_error("sigma phase is not uniform across pairs");
    }
  }
  return exponent;
}

bool orbit_members_valid(const OrbitStructure& orbit) {
  Gf2RowBasis rows;
  for (const auto& g : orbit.generators) {
    if (g.size() != orbit.reference.size() || !rows.insert(g.value())) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string to_string(SynthesisCase c) {
  switch (c) {
    case SynthesisCase::identity:
      return "identity";
    case SynthesisCase::diagonal:
      return "diagonal";
    case SynthesisCase::anticommuting:
      return "anticommuting";
    case SynthesisCase::commuting:
      return "commuting";
    case SynthesisCase::orbit:
      return "orbit";
    case SynthesisCase::orbit_cover:
      return "orbit_cover";
  }
  return "unknown";
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::automatic:
      return "auto";
    case Strategy::orbit:
      return "orbit";
    case Strategy::general:
      return "general";
    case Strategy::cover:
      return "cover";
  }
  return "unknown";
}

std::optional<Strategy> strategy_from_string(const std::string& name) {
  if (name == "auto") return Strategy::automatic;
  if (name == "orbit") return Strategy::orbit;
  if (name == "general") return Strategy::general;
  if (name == "cover") return Strategy::cover;
  return std::nullopt;
}

std::optional<BitString> commutation_witness(const PauliString& sigma,
                                             const BasisSet& basis) {
  if (sigma.size() != basis.qubit_count()) {
    throw std::invalid_argument("Pauli length does not match basis");
  }
  if (sigma.is_diagonal()) {
    return std::nullopt;
  }
  for (const auto& z : basis.states()) {
    if (!basis.contains(z ^ sigma.x_part())) {
      return z;
    }
  }
  return std::nullopt;
}

ControlSpec OrbitFrame::residual_controls() const {
  ControlSpec spec;
  const size_t n = residual_word.size();
  for (uint32_t q = 0; q < n; ++q) {
    if (!(pivot_mask & qubit_bit(q, n))) {
      spec.push_back(Control{q, residual_word.bit(q)});
    }
  }
  return spec;
}

OrbitFrame build_orbit_frame(const OrbitStructure& orbit, uint32_t n) {
  if (orbit.reference.size() != n || !orbit_members_valid(orbit)) {
    throw std::invalid_argument("invalid orbit structure");
  }
  OrbitFrame frame{Circuit(n), 0, orbit.reference};

  std::vector<uint64_t> masks;
  masks.reserve(orbit.generators.size());
  for (const auto& g : orbit.generators) {
    masks.push_back(g.value());
  }

  for (size_t j = 0; j < masks.size(); ++j) {
    uint64_t d = masks[j];
    if (d & frame.pivot_mask) {
      throw std::logic_error("propagated generator touches a pivot");
    }
    std::vector<size_t> support = BitString(n, d).support();
    for (const auto& edge : fanout_compress_edges(support)) {
      frame.compress.append(edge);
      uint64_t mc = qubit_bit(edge.control, n);
      uint64_t mt = qubit_bit(edge.target, n);
      // Track the reference image and push the remaining masks through.
      if (frame.residual_word.value() & mc) {
        frame.residual_word =
            BitString(n, frame.residual_word.value() ^ mt);
      }
      for (size_t m = j + 1; m < masks.size(); ++m) {
        if (masks[m] & mc) {
          masks[m] ^= mt;
        }
      }
    }
    frame.pivot_mask |= qubit_bit(static_cast<uint32_t>(support.front()), n);
  }
  return frame;
}

Gate orbit_rotation(const PauliString& sigma, const OrbitFrame& frame,
                    double t) {
  const uint32_t n = static_cast<uint32_t>(sigma.size());
  PauliString tau = propagate_forward(sigma, frame.compress.gates());

  const uint64_t pivots = frame.pivot_mask;
  if ((tau.x_part().value() & ~pivots) != 0) {
    throw std::invalid_argument(
        "sigma does not commute with the orbit projector");
  }
  uint64_t a_hat = tau.x_part().value();
  uint64_t b_hat = tau.z_part().value() & pivots;
  uint64_t b_res = tau.z_part().value() & ~pivots;

  // tau (I (x) |x><x|) = i^e sigma_hat (x) |x><x| with sigma_hat Hermitian.
  int k_tau = (dot_mod4_masks(tau.x_part().value(), tau.z_part().value()) +
               (tau.sign() < 0 ? 2 : 0)) %
              4;
  int e = (k_tau - dot_mod4_masks(a_hat, b_hat) +
           2 * (std::popcount(b_res & frame.residual_word.value()) % 2) + 8) %
          4;
  if (e != 0 && e != 2) {
    throw std::logic_error("orbit sign propagation left the +-1 class");
  }
  double signed_t = (e == 2) ? -t : t;

  ControlSpec controls = frame.residual_controls();
  if (a_hat == 0 && b_hat == 0) {
    if (controls.empty()) {
      return GlobalPhaseGate{signed_t};
    }
    return PhaseGate{signed_t, std::move(controls)};
  }
  PauliString sigma_hat(BitString(n, a_hat), BitString(n, b_hat));
  if (std::popcount(a_hat | b_hat) == 1) {
    uint32_t q = static_cast<uint32_t>(
        BitString(n, a_hat | b_hat).support().front());
    RotationAxis axis = a_hat == 0   ? RotationAxis::Z
                        : b_hat == 0 ? RotationAxis::X
                                     : RotationAxis::Y;
    return RotationGate{axis, -2 * signed_t, std::move(controls), q};
  }
  return PauliRotationGate{std::move(sigma_hat), -2 * signed_t,
                           std::move(controls)};
}

Circuit synth_orbit(const PauliString& sigma, const OrbitStructure& orbit,
                    double t) {
  std::pair<PauliString, double> term{sigma, t};
  return synth_orbit_multi(std::span(&term, 1), orbit);
}

Circuit synth_orbit_multi(
    std::span<const std::pair<PauliString, double>> terms,
    const OrbitStructure& orbit) {
  if (terms.empty()) {
    throw std::invalid_argument("no terms to synthesize");
  }
  const uint32_t n = static_cast<uint32_t>(terms.front().first.size());
  OrbitFrame frame = build_orbit_frame(orbit, n);
  Circuit rotations(n);
  for (const auto& [sigma, t] : terms) {
    double teff = sigma.sign() < 0 ? -t : t;
    rotations.append(orbit_rotation(sigma.with_sign(1), frame, teff));
  }
  Circuit out(n);
  append_conjugated(out, frame.compress, rotations);
  return out;
}

Circuit synth_general(const PauliString& sigma, const BasisSet& basis,
                      double t, SynthesisCase* out_case) {
  const uint32_t n = static_cast<uint32_t>(basis.qubit_count());
  if (sigma.size() != n) {
    throw std::invalid_argument("Pauli length does not match basis");
  }
  if (auto witness = commutation_witness(sigma, basis)) {
    throw CommutationError(*witness,
                           "sigma does not commute with the projector");
  }
  double teff = sigma.sign() < 0 ? -t : t;
  PauliString body = sigma.with_sign(1);
  const BitString& a = body.x_part();
  const BitString& b = body.z_part();

  Circuit out(n);
  SynthesisCase kind;

  if (a.none() && b.none()) {
    kind = SynthesisCase::identity;
    Circuit m = prefix_permutation(n, basis.states());
    append_conjugated(out, m,
                      synth_lowpass_phase(basis.size(), n, teff, n));
  } else if (a.none()) {
    kind = SynthesisCase::diagonal;
    auto [plus, minus] = split_by_z_eigenvalue(basis, b);
    for (int s : {+1, -1}) {
      const BasisSet& part = s > 0 ? plus : minus;
      if (part.empty()) {
        continue;
      }
      Circuit m = prefix_permutation(n, part.states());
      append_conjugated(out, m,
                        synth_lowpass_phase(part.size(), n, s * teff, n));
    }
  } else {
    XPairing pairing = pair_by_x(basis, body);
    if (pairing.anticommuting) {
      kind = SynthesisCase::anticommuting;
      // Pairs land on (|2j>, |2j+1>); sigma acts as eps * Y on each pair.
      std::vector<BitString> interleaved;
      for (const auto& [x, y] : pairing.ordered.pairs) {
        interleaved.push_back(x);
        interleaved.push_back(y);
      }
      int exponent = uniform_pair_phase(body, pairing.ordered);
      if (exponent % 2 == 0) {
        throw std::logic_error("anticommuting case requires phase +-i");
      }
      double eps = exponent == 1 ? 1.0 : -1.0;
      Circuit m = prefix_permutation(n, interleaved);
      append_conjugated(
          out, m,
          synth_lowpass_rotation(pairing.ordered.pairs.size(), n - 1,
                                 RotationAxis::Y, -2 * eps * teff, n - 1, n));
    } else {
      kind = SynthesisCase::commuting;
      for (int s : {+1, -1}) {
        const PairSet& pairs = s > 0 ? pairing.plus : pairing.minus;
        if (pairs.pairs.empty()) {
          continue;
        }
        std::vector<BitString> interleaved;
        for (const auto& [x, y] : pairs.pairs) {
          interleaved.push_back(x);
          interleaved.push_back(y);
        }
        int exponent = uniform_pair_phase(body, pairs);
        if (exponent % 2 != 0) {
          throw std::logic_error("commuting case requires phase +-1");
        }
        double phi = exponent == 0 ? 1.0 : -1.0;
        Circuit m = prefix_permutation(n, interleaved);
        append_conjugated(
            out, m,
            synth_lowpass_rotation(pairs.pairs.size(), n - 1, RotationAxis::X,
                                   -2 * phi * teff, n - 1, n));
      }
    }
  }
  if (out_case != nullptr) {
    *out_case = kind;
  }
  return out;
}

namespace {

bool diagonal_part_constant(const PauliString& sigma,
                            const OrbitStructure& orbit) {
  for (const auto& g : orbit.generators) {
    if (sigma.z_part().dot(g)) {
      return false;
    }
  }
  return true;
}

}  // namespace

SynthesisReport synthesize(const PauliString& sigma, const BasisSet& basis,
                           double t, const SynthesisOptions& options) {
  const uint32_t n = static_cast<uint32_t>(basis.qubit_count());
  if (sigma.size() != n) {
    throw std::invalid_argument("Pauli length does not match basis");
  }

  SynthesisReport report;
  report.circuit = Circuit(n);

  if (basis.empty()) {
    report.kind = SynthesisCase::identity;
    report.warnings.push_back("empty basis: evolution is the identity");
    report.resources = count_resources(report.circuit, options.epsilon,
                                       options.t_model_constant);
    if (options.verify && n <= options.dense_cap) {
      report.verification_residual = 0.0;
    }
    return report;
  }

  if (auto witness = commutation_witness(sigma, basis)) {
    throw CommutationError(
        *witness, "sigma does not commute with the projector: state " +
                      witness->str() + " maps outside B");
  }

  double teff = sigma.sign() < 0 ? -t : t;
  PauliString body = sigma.with_sign(1);

  auto run_cover = [&](const std::vector<OrbitStructure>& parts) {
    Circuit out(n);
    for (const auto& part : parts) {
      out.extend(synth_orbit(body, part, teff));
    }
    return out;
  };

  switch (options.strategy) {
    case Strategy::orbit: {
      auto orbit = detect_orbit(basis);
      if (!orbit) {
        throw std::invalid_argument("basis is not a single X-orbit coset");
      }
      report.kind = SynthesisCase::orbit;
      report.circuit = synth_orbit(body, *orbit, teff);
      break;
    }
    case Strategy::general: {
      report.circuit = synth_general(body, basis, teff, &report.kind);
      break;
    }
    case Strategy::cover: {
      report.kind = SynthesisCase::orbit_cover;
      report.circuit = run_cover(cover_by_orbits(basis, body));
      break;
    }
    case Strategy::automatic: {
      auto orbit = detect_orbit(basis);
      if (orbit && (!body.x_part().none() ||
                    diagonal_part_constant(body, *orbit))) {
        report.kind = SynthesisCase::orbit;
        report.circuit = synth_orbit(body, *orbit, teff);
        break;
      }
      auto parts = cover_by_orbits(basis, body);
      bool cover_ok =
          parts.size() <=
          static_cast<size_t>(options.cover_parts_fraction * basis.size());
      for (const auto& part : parts) {
        if ((size_t{1} << part.dimension()) < options.cover_min_part_size) {
          cover_ok = false;
        }
        if (body.x_part().none() && !diagonal_part_constant(body, part)) {
          cover_ok = false;
        }
      }
      if (cover_ok) {
        report.kind = SynthesisCase::orbit_cover;
        report.circuit = run_cover(parts);
      } else {
        report.circuit = synth_general(body, basis, teff, &report.kind);
      }
      break;
    }
  }

  report.resources = count_resources(report.circuit, options.epsilon,
                                     options.t_model_constant);
  if (options.verify && n <= options.dense_cap) {
    double residual = verify_circuit(sigma, basis, t, report.circuit,
                                     options.dense_cap);
    report.verification_residual = residual;
    if (residual > options.tolerance) {
      report.warnings.push_back("verification residual exceeds tolerance");
    }
  }
  return report;
}

}  // namespace projevo
