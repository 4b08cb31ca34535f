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

#include "projevo/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace projevo {

namespace {

using nlohmann::json;

std::string controls_to_text(const ControlSpec& controls) {
  std::string s = "[";
  for (size_t i = 0; i < controls.size(); ++i) {
    if (i) {
      s += ",";
    }
    s += controls[i].closed ? '+' : '-';
    s += std::to_string(controls[i].qubit);
  }
  s += "]";
  return s;
}

ControlSpec controls_from_text(const std::string& token) {
  if (token.size() < 2 || token.front() != '[' || token.back() != ']') {
    throw std::invalid_argument("malformed control list: " + token);
  }
  ControlSpec controls;
  std::string body = token.substr(1, token.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() < 2 || (item[0] != '+' && item[0] != '-')) {
      throw std::invalid_argument("malformed control: " + item);
    }
    controls.push_back(
        Control{static_cast<uint32_t>(std::stoul(item.substr(1))),
                item[0] == '+'});
  }
  return make_control_spec(std::move(controls));
}

// Splits "NAME(angle)" into its pieces.
std::pair<std::string, double> name_and_angle(const std::string& token) {
  auto open = token.find('(');
  if (open == std::string::npos || token.back() != ')') {
    throw std::invalid_argument("expected NAME(angle), got: " + token);
  }
  return {token.substr(0, open),
          std::stod(token.substr(open + 1, token.size() - open - 2))};
}

json controls_to_json(const ControlSpec& controls) {
  json out = json::array();
  for (const auto& c : controls) {
    out.push_back({{"qubit", c.qubit}, {"closed", c.closed}});
  }
  return out;
}

ControlSpec controls_from_json(const json& j) {
  ControlSpec controls;
  for (const auto& c : j) {
    controls.push_back(Control{c.at("qubit").get<uint32_t>(),
                               c.at("closed").get<bool>()});
  }
  return make_control_spec(std::move(controls));
}

const char* axis_name(RotationAxis axis) {
  switch (axis) {
    case RotationAxis::X:
      return "X";
    case RotationAxis::Y:
      return "Y";
    default:
      return "Z";
  }
}

RotationAxis axis_from_name(const std::string& name) {
  if (name == "X" || name == "x") return RotationAxis::X;
  if (name == "Y" || name == "y") return RotationAxis::Y;
  if (name == "Z" || name == "z") return RotationAxis::Z;
  throw std::invalid_argument("unknown rotation axis: " + name);
}

}  // namespace

std::string format_angle(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string circuit_to_text(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.qubit_count() << "\n";
  for (const auto& gate : circuit.gates()) {
    std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, XGate>) {
            out << "X " << g.qubit;
          } else if constexpr (std::is_same_v<T, CXGate>) {
            out << "CX " << g.control << " " << g.target;
          } else if constexpr (std::is_same_v<T, MCXGate>) {
            out << "MCX " << controls_to_text(g.controls) << " " << g.target;
          } else if constexpr (std::is_same_v<T, RotationGate>) {
            out << "CR" << axis_name(g.axis) << "(" << format_angle(g.angle)
                << ") " << controls_to_text(g.controls) << " " << g.target;
          } else if constexpr (std::is_same_v<T, PhaseGate>) {
            out << "CP(" << format_angle(g.angle) << ") "
                << controls_to_text(g.controls);
          } else if constexpr (std::is_same_v<T, GlobalPhaseGate>) {
            out << "GPHASE(" << format_angle(g.angle) << ")";
          } else if constexpr (std::is_same_v<T, PauliRotationGate>) {
            out << "CPAULI(" << format_angle(g.angle) << ") "
                << controls_to_text(g.controls) << " " << g.pauli.str();
          } else if constexpr (std::is_same_v<T, TranspositionGate>) {
            out << "T " << g.x.str() << " " << g.y.str();
          } else if constexpr (std::is_same_v<T, PermToPrefixGate>) {
            out << "PERMPFX";
            for (const auto& z : g.states) {
              out << " " << z.str();
            }
          }
        },
        gate);
    out << "\n";
  }
  return out.str();
}

Circuit circuit_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<Circuit> circuit;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') {
      continue;
    }
    auto fail = [&](const std::string& why) -> std::runtime_error {
      return std::runtime_error("line " + std::to_string(line_no) + ": " + why);
    };
    if (head == "qubits") {
      uint32_t n;
      if (!(ls >> n)) {
        throw fail("missing qubit count");
      }
      circuit.emplace(n);
      continue;
    }
    if (!circuit) {
      throw fail("missing 'qubits <n>' header");
    }
    if (head == "X") {
      uint32_t q;
      ls >> q;
      circuit->append(XGate{q});
    } else if (head == "CX") {
      uint32_t c, t;
      ls >> c >> t;
      circuit->append(CXGate{c, t});
    } else if (head == "MCX") {
      std::string ctrls;
      uint32_t t;
      ls >> ctrls >> t;
      circuit->append(MCXGate{controls_from_text(ctrls), t});
    } else if (head.rfind("CRX(", 0) == 0 || head.rfind("CRY(", 0) == 0 ||
               head.rfind("CRZ(", 0) == 0) {
      auto [name, angle] = name_and_angle(head);
      std::string ctrls;
      uint32_t t;
      ls >> ctrls >> t;
      circuit->append(RotationGate{axis_from_name(name.substr(2)), angle,
                                   controls_from_text(ctrls), t});
    } else if (head.rfind("CP(", 0) == 0) {
      auto [name, angle] = name_and_angle(head);
      std::string ctrls;
      ls >> ctrls;
      circuit->append(PhaseGate{angle, controls_from_text(ctrls)});
    } else if (head.rfind("GPHASE(", 0) == 0) {
      auto [name, angle] = name_and_angle(head);
      circuit->append(GlobalPhaseGate{angle});
    } else if (head.rfind("CPAULI(", 0) == 0) {
      auto [name, angle] = name_and_angle(head);
      std::string ctrls, pauli;
      ls >> ctrls >> pauli;
      circuit->append(PauliRotationGate{PauliString::parse(pauli), angle,
                                        controls_from_text(ctrls)});
    } else if (head == "T") {
      std::string x, y;
      ls >> x >> y;
      circuit->append(
          TranspositionGate{BitString::parse(x), BitString::parse(y)});
    } else if (head == "PERMPFX") {
      std::vector<BitString> states;
      std::string s;
      while (ls >> s) {
        states.push_back(BitString::parse(s));
      }
      circuit->append(PermToPrefixGate{std::move(states)});
    } else {
      throw fail("unknown gate: " + head);
    }
  }
  if (!circuit) {
    throw std::runtime_error("empty circuit file");
  }
  return *circuit;
}

json circuit_to_json(const Circuit& circuit) {
  json gates = json::array();
  for (const auto& gate : circuit.gates()) {
    std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, XGate>) {
            gates.push_back({{"kind", "x"}, {"qubit", g.qubit}});
          } else if constexpr (std::is_same_v<T, CXGate>) {
            gates.push_back(
                {{"kind", "cx"}, {"control", g.control}, {"target", g.target}});
          } else if constexpr (std::is_same_v<T, MCXGate>) {
            gates.push_back({{"kind", "mcx"},
                             {"controls", controls_to_json(g.controls)},
                             {"target", g.target}});
          } else if constexpr (std::is_same_v<T, RotationGate>) {
            gates.push_back({{"kind", "crot"},
                             {"axis", axis_name(g.axis)},
                             {"angle", g.angle},
                             {"controls", controls_to_json(g.controls)},
                             {"target", g.target}});
          } else if constexpr (std::is_same_v<T, PhaseGate>) {
            gates.push_back({{"kind", "cphase"},
                             {"angle", g.angle},
                             {"controls", controls_to_json(g.controls)}});
          } else if constexpr (std::is_same_v<T, GlobalPhaseGate>) {
            gates.push_back({{"kind", "gphase"}, {"angle", g.angle}});
          } else if constexpr (std::is_same_v<T, PauliRotationGate>) {
            gates.push_back({{"kind", "cpauli"},
                             {"pauli", g.pauli.str()},
                             {"angle", g.angle},
                             {"controls", controls_to_json(g.controls)}});
          } else if constexpr (std::is_same_v<T, TranspositionGate>) {
            gates.push_back(
                {{"kind", "transposition"}, {"x", g.x.str()}, {"y", g.y.str()}});
          } else if constexpr (std::is_same_v<T, PermToPrefixGate>) {
            json states = json::array();
            for (const auto& z : g.states) {
              states.push_back(z.str());
            }
            gates.push_back({{"kind", "perm_to_prefix"}, {"states", states}});
          }
        },
        gate);
  }
  return {{"n", circuit.qubit_count()}, {"gates", gates}};
}

Circuit circuit_from_json(const json& j) {
  Circuit circuit(j.at("n").get<uint32_t>());
  for (const auto& g : j.at("gates")) {
    const std::string kind = g.at("kind").get<std::string>();
    if (kind == "x") {
      circuit.append(XGate{g.at("qubit").get<uint32_t>()});
    } else if (kind == "cx") {
      circuit.append(CXGate{g.at("control").get<uint32_t>(),
                            g.at("target").get<uint32_t>()});
    } else if (kind == "mcx") {
      circuit.append(MCXGate{controls_from_json(g.at("controls")),
                             g.at("target").get<uint32_t>()});
    } else if (kind == "crot") {
      circuit.append(RotationGate{
          axis_from_name(g.at("axis").get<std::string>()),
          g.at("angle").get<double>(), controls_from_json(g.at("controls")),
          g.at("target").get<uint32_t>()});
    } else if (kind == "cphase") {
      circuit.append(PhaseGate{g.at("angle").get<double>(),
                               controls_from_json(g.at("controls"))});
    } else if (kind == "gphase") {
      circuit.append(GlobalPhaseGate{g.at("angle").get<double>()});
    } else if (kind == "cpauli") {
      circuit.append(
          PauliRotationGate{PauliString::parse(g.at("pauli").get<std::string>()),
                            g.at("angle").get<double>(),
                            controls_from_json(g.at("controls"))});
    } else if (kind == "transposition") {
      circuit.append(
          TranspositionGate{BitString::parse(g.at("x").get<std::string>()),
                            BitString::parse(g.at("y").get<std::string>())});
    } else if (kind == "perm_to_prefix") {
      std::vector<BitString> states;
      for (const auto& s : g.at("states")) {
        states.push_back(BitString::parse(s.get<std::string>()));
      }
      circuit.append(PermToPrefixGate{std::move(states)});
    } else {
      throw std::invalid_argument("unknown gate kind: " + kind);
    }
  }
  return circuit;
}

ProblemFile problem_from_json(const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("problem file must be a JSON object");
  }
  for (const char* field : {"n", "sigma", "basis", "t"}) {
    if (!j.contains(field)) {
      throw std::invalid_argument(std::string("problem file missing field '") +
                                  field + "'");
    }
  }
  const auto n = j.at("n").get<int64_t>();
  if (n < 1 || n > 64) {
    throw std::invalid_argument("n must lie in [1, 64]");
  }
  PauliString sigma = PauliString::parse(j.at("sigma").get<std::string>());
  if (sigma.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("sigma length does not match n");
  }
  std::vector<std::string> states = j.at("basis").get<std::vector<std::string>>();
  BasisSet basis = BasisSet::from_strings(n, states);

  ProblemFile problem{sigma, basis, j.at("t").get<double>()};
  if (j.contains("epsilon")) {
    problem.epsilon = j.at("epsilon").get<double>();
    if (!(problem.epsilon > 0 && problem.epsilon < 1)) {
      throw std::invalid_argument("epsilon must lie in (0, 1)");
    }
  }
  if (j.contains("strategy")) {
    auto strategy = strategy_from_string(j.at("strategy").get<std::string>());
    if (!strategy) {
      throw std::invalid_argument("unknown strategy '" +
                                  j.at("strategy").get<std::string>() + "'");
    }
    problem.strategy = *strategy;
  }
  return problem;
}

json problem_to_json(const ProblemFile& problem) {
  json basis = json::array();
  for (const auto& z : problem.basis.states()) {
    basis.push_back(z.str());
  }
  return {{"n", problem.basis.qubit_count()}, {"sigma", problem.sigma.str()},
          {"basis", basis},                   {"t", problem.t},
          {"epsilon", problem.epsilon},       {"strategy", to_string(problem.strategy)}};
}

json resources_to_json(const ResourceCount& rc) {
  return {{"cx", rc.cx},
          {"t_count", rc.t_count},
          {"rotation_count", rc.rotation_count},
          {"mcx_count", rc.mcx_count},
          {"ancillas", rc.ancillas},
          {"depth_upper_bound", rc.depth},
          {"epsilon", rc.epsilon},
          {"model_based", true}};
}

json report_to_json(const SynthesisReport& report) {
  json verification;
  if (report.verification_residual) {
    verification = {{"status", "ok"},
                    {"residual", *report.verification_residual}};
  } else {
    verification = {{"status", "skipped"}};
  }
  return {{"case", to_string(report.kind)},
          {"resources", resources_to_json(report.resources)},
          {"verification", verification},
          {"warnings", report.warnings}};
}

json example_spec_to_json(const ExampleSpec& spec) {
  json params = json::object();
  for (const auto& [key, value] : spec.parameters) {
    params[key] = value;
  }
  json terms = json::array();
  for (const auto& term : spec.terms) {
    json basis = json::array();
    for (const auto& z : term.basis.states()) {
      basis.push_back(z.str());
    }
    terms.push_back({{"sigma", term.sigma.str()},
                     {"basis", basis},
                     {"t", term.angle}});
  }
  return {{"name", spec.name}, {"parameters", params}, {"terms", terms}};
}

}  // namespace projevo
