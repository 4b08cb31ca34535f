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

#include "projevo/basis.hpp"

#include <stdexcept>

namespace projevo {

BasisSet::BasisSet(size_t n, std::vector<BitString> states)
    : n_(n), states_(std::move(states)) {
  if (n == 0 || n > 64) {
    throw std::invalid_argument("basis qubit count must be in [1, 64]");
  }
  for (const auto& z : states_) {
    if (z.size() != n_) {
      throw std::invalid_argument("basis state " + z.str() +
                                  " does not have length " + std::to_string(n_));
    }
    if (!index_.insert(z.value()).second) {
      throw std::invalid_argument("duplicate basis state " + z.str());
    }
  }
}

BasisSet BasisSet::from_strings(size_t n, const std::vector<std::string>& states) {
  std::vector<BitString> parsed;
  parsed.reserve(states.size());
  for (const auto& s : states) {
    parsed.push_back(BitString::parse(s));
  }
  return BasisSet(n, std::move(parsed));
}

bool BasisSet::contains(const BitString& z) const {
  if (z.size() != n_) {
    throw std::invalid_argument("state length does not match basis");
  }
  return index_.count(z.value()) != 0;
}

std::vector<BitString> OrbitStructure::expand() const {
  std::vector<BitString> out;
  out.reserve(size_t{1} << generators.size());
  out.push_back(reference);
  for (const auto& g : generators) {
    size_t m = out.size();
    for (size_t i = 0; i < m; ++i) {
      out.push_back(out[i] ^ g);
    }
  }
  return out;
}

}  // namespace projevo
