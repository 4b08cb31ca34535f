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

#include "projevo/resources.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "projevo/lowering.hpp"

namespace projevo {

namespace {

bool clifford_angle(double angle) {
  double r = std::fmod(std::fabs(angle), std::numbers::pi / 2);
  return r < 1e-9 || r > std::numbers::pi / 2 - 1e-9;
}

uint64_t mcx_cx(size_t m) {
  if (m <= 1) {
    return m;
  }
  return 6 * (m - 1);
}

uint64_t mcx_t(size_t m) { return m >= 2 ? 7 * (m - 1) : 0; }

struct DepthTracker {
  std::vector<uint64_t> layer;

  explicit DepthTracker(uint32_t n) : layer(n, 0) {}

  void touch(std::initializer_list<uint32_t> qubits,
             const ControlSpec& controls = {}) {
    uint64_t t = 0;
    for (uint32_t q : qubits) {
      t = std::max(t, layer[q]);
    }
    for (const auto& c : controls) {
      t = std::max(t, layer[c.qubit]);
    }
    ++t;
    for (uint32_t q : qubits) {
      layer[q] = t;
    }
    for (const auto& c : controls) {
      layer[c.qubit] = t;
    }
  }

  uint64_t depth() const {
    uint64_t d = 0;
    for (uint64_t l : layer) {
      d = std::max(d, l);
    }
    return d;
  }
};

}  // namespace

uint64_t rotation_t_cost(double epsilon, double t_model_constant) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  return static_cast<uint64_t>(
      std::ceil(t_model_constant * std::log2(1.0 / epsilon)));
}

ResourceCount count_resources(const Circuit& circuit, double epsilon,
                              double t_model_constant) {
  const uint64_t rot_t = rotation_t_cost(epsilon, t_model_constant);
  Circuit lowered = lower_full(circuit);

  ResourceCount rc;
  rc.epsilon = epsilon;
  DepthTracker depth(lowered.qubit_count());

  auto rotation_costs = [&](double angle, size_t m) {
    if (m == 0) {
      if (!clifford_angle(angle)) {
        rc.rotation_count += 1;
        rc.t_count += rot_t;
      }
      return;
    }
    rc.rotation_count += 1;
    rc.cx += 2 * mcx_cx(m);
    rc.t_count += 2 * mcx_t(m) + 2 * rot_t;
    if (m >= 2) {
      rc.ancillas = std::max(rc.ancillas, 1u);
    }
  };

  for (const auto& gate : lowered.gates()) {
    std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, XGate>) {
            depth.touch({g.qubit});
          } else if constexpr (std::is_same_v<T, CXGate>) {
            rc.cx += 1;
            depth.touch({g.control, g.target});
          } else if constexpr (std::is_same_v<T, MCXGate>) {
            size_t m = g.controls.size();
            rc.cx += mcx_cx(m);
            rc.t_count += mcx_t(m);
            if (m >= 2) {
              rc.mcx_count += 1;
              rc.ancillas = std::max(rc.ancillas, 1u);
            }
            depth.touch({g.target}, g.controls);
          } else if constexpr (std::is_same_v<T, RotationGate>) {
            rotation_costs(g.angle, g.controls.size());
            depth.touch({g.target}, g.controls);
          } else if constexpr (std::is_same_v<T, PhaseGate>) {
            if (!g.controls.empty()) {
              rotation_costs(g.angle, g.controls.size() - 1);
            }
            depth.touch({}, g.controls);
          } else if constexpr (std::is_same_v<T, GlobalPhaseGate>) {
            // free
          } else {
            throw std::logic_error("unlowered gate in resource count");
          }
        },
        gate);
  }
  rc.depth = depth.depth();
  return rc;
}

}  // namespace projevo
