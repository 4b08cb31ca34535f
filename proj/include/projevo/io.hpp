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

#include <string>

#include <json.hpp>

#include "projevo/examples.hpp"
#include "projevo/synth.hpp"

namespace projevo {

/// One gate per line, e.g. `X 3`, `CX 0 1`, `MCX [-1,+2] 0`,
/// `CRY(0.7853981634) [+0] 2`, `CP(1.5707963268) [-0,-1]`, `GPHASE(0.1)`.
/// Control polarity: '+' fires on |1>, '-' on |0>. Angles are printed with
/// 12 significant digits. A `qubits n` header precedes the gates.
std::string circuit_to_text(const Circuit& circuit);
Circuit circuit_from_text(const std::string& text);

nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& j);

/// Synthesis problem: {"n", "sigma", "basis", "t"} with optional "epsilon"
/// and "strategy".
struct ProblemFile {
  PauliString sigma;
  BasisSet basis;
  double t = 0.0;
  double epsilon = 1e-10;
  Strategy strategy = Strategy::automatic;
};

ProblemFile problem_from_json(const nlohmann::json& j);
nlohmann::json problem_to_json(const ProblemFile& problem);

nlohmann::json resources_to_json(const ResourceCount& rc);
nlohmann::json report_to_json(const SynthesisReport& report);

nlohmann::json example_spec_to_json(const ExampleSpec& spec);

std::string format_angle(double value);

}  // namespace projevo
