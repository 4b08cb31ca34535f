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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "projevo/gate.hpp"
#include "projevo/lowpass.hpp"
#include "projevo/resources.hpp"
#include "projevo/subspace.hpp"

namespace projevo {

enum class SynthesisCase {
  identity,
  diagonal,
  anticommuting,
  commuting,
  orbit,
  orbit_cover,
};

enum class Strategy { automatic, orbit, general, cover };

std::string to_string(SynthesisCase c);
std::string to_string(Strategy s);
std::optional<Strategy> strategy_from_string(const std::string& name);

struct SynthesisOptions {
  Strategy strategy = Strategy::automatic;
  double epsilon = 1e-10;
  double t_model_constant = 3.0;
  bool verify = true;
  uint32_t dense_cap = 12;
  double tolerance = 1e-9;
  // The automatic strategy prefers an orbit cover when it has at most
  // cover_parts_fraction * |B| parts, none of them smaller than
  // cover_min_part_size.
  double cover_parts_fraction = 0.5;
  size_t cover_min_part_size = 2;
};

struct SynthesisReport {
  SynthesisCase kind = SynthesisCase::identity;
  Circuit circuit{1};
  ResourceCount resources;
  std::optional<double> verification_residual;  // nullopt when skipped
  std::vector<std::string> warnings;
};

/// Thrown when sigma does not commute with P_B; carries one basis state
/// whose X-image leaves B.
class CommutationError : public std::invalid_argument {
 public:
  CommutationError(BitString witness, const std::string& message)
      : std::invalid_argument(message), witness_(witness) {}
  const BitString& witness() const { return witness_; }

 private:
  BitString witness_;
};

/// A basis state of B whose image under the X-part leaves B, if any.
std::optional<BitString> commutation_witness(const PauliString& sigma,
                                             const BasisSet& basis);

/// The CX network compressing an orbit coset onto its pivot qubits: after
/// the gates, the coset spans all pivot-register words tensored with one
/// residual word. No X gates are needed; the residual word becomes the
/// control pattern of the rotation.
struct OrbitFrame {
  Circuit compress;
  uint64_t pivot_mask = 0;       // value-space mask of pivot qubits
  BitString residual_word;       // image of the reference after compress
  ControlSpec residual_controls() const;
};

OrbitFrame build_orbit_frame(const OrbitStructure& orbit, uint32_t n);

/// The controlled gate realizing e^{it sigma P} in the compressed frame.
Gate orbit_rotation(const PauliString& sigma, const OrbitFrame& frame,
                    double t);

/// e^{it sigma P_B} for an X-orbit coset B: compress, one controlled Pauli
/// rotation (or controlled phase when sigma is constant on the orbit), then
/// uncompress.
Circuit synth_orbit(const PauliString& sigma, const OrbitStructure& orbit,
                    double t);

/// Shared-frame variant for several commuting terms on the same orbit.
Circuit synth_orbit_multi(
    std::span<const std::pair<PauliString, double>> terms,
    const OrbitStructure& orbit);

/// The four-case construction for a general sigma-closed B.
Circuit synth_general(const PauliString& sigma, const BasisSet& basis,
                      double t, SynthesisCase* out_case = nullptr);

/// Master entry point: dispatches between the orbit fast path, an orbit
/// cover and the general construction, counts resources and (within the
/// dense cap) verifies the result against the closed-form evolution.
SynthesisReport synthesize(const PauliString& sigma, const BasisSet& basis,
                           double t, const SynthesisOptions& options = {});

}  // namespace projevo
