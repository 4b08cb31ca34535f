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

#include "projevo/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "projevo/io.hpp"
#include "projevo/lowering.hpp"

namespace projevo {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitCommutation = 2;
constexpr int kExitSchema = 3;
constexpr int kExitDenseCap = 4;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  json j;
  in >> j;
  return j;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path);
  }
  out << contents;
}

std::string out_prefix(const std::string& requested,
                       const std::string& problem_path) {
  if (!requested.empty()) {
    return requested;
  }
  fs::path p(problem_path);
  p.replace_extension();
  return p.string();
}

struct CommonFlags {
  std::string strategy;
  double epsilon = -1;
  double tolerance = 1e-9;
  uint32_t dense_cap = 12;
  double t_model_constant = 3.0;
  bool no_verify = false;
};

SynthesisOptions to_options(const CommonFlags& flags,
                            const ProblemFile& problem) {
  SynthesisOptions options;
  options.strategy = problem.strategy;
  if (!flags.strategy.empty()) {
    auto s = strategy_from_string(flags.strategy);
    if (!s) {
      throw std::invalid_argument("unknown strategy '" + flags.strategy + "'");
    }
    options.strategy = *s;
  }
  options.epsilon = flags.epsilon > 0 ? flags.epsilon : problem.epsilon;
  options.tolerance = flags.tolerance;
  options.dense_cap = flags.dense_cap;
  options.t_model_constant = flags.t_model_constant;
  options.verify = !flags.no_verify;
  return options;
}

int synth_one(const std::string& path, const CommonFlags& flags,
              const std::string& requested_out, std::ostream& out,
              std::ostream& err) {
  ProblemFile problem = problem_from_json(read_json_file(path));
  SynthesisOptions options = to_options(flags, problem);

  SynthesisReport report;
  try {
    report = synthesize(problem.sigma, problem.basis, problem.t, options);
  } catch (const CommutationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCommutation;
  }

  Circuit lowered = lower_full(report.circuit);
  std::string prefix = out_prefix(requested_out, path);
  write_file(prefix + ".circuit.txt", circuit_to_text(lowered));
  write_file(prefix + ".circuit.json", circuit_to_json(lowered).dump(2) + "\n");

  json rj = report_to_json(report);
  rj["problem"] = problem_to_json(problem);
  rj["strategy"] = to_string(options.strategy);
  write_file(prefix + ".report.json", rj.dump(2) + "\n");

  out << path << ": case=" << to_string(report.kind)
      << " gates=" << lowered.size()
      << " cx=" << report.resources.cx
      << " rotations=" << report.resources.rotation_count
      << " t=" << report.resources.t_count;
  if (report.verification_residual) {
    out << " residual=" << format_angle(*report.verification_residual);
  } else {
    out << " residual=skipped";
  }
  out << "\n";
  for (const auto& w : report.warnings) {
    err << "warning: " << w << "\n";
  }
  if (report.verification_residual &&
      *report.verification_residual > options.tolerance) {
    err << "error: residual exceeds tolerance\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_synth(const std::vector<std::string>& paths, const CommonFlags& flags,
              const std::string& requested_out, std::ostream& out,
              std::ostream& err) {
  if (paths.size() > 1 && !requested_out.empty()) {
    err << "error: --out requires a single problem file\n";
    return kExitSchema;
  }
  for (const auto& path : paths) {
    int rc = synth_one(path, flags, requested_out, out, err);
    if (rc != kExitOk) {
      return rc;
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& problem_path, const std::string& circuit_path,
               const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  ProblemFile problem = problem_from_json(read_json_file(problem_path));
  if (problem.basis.qubit_count() > flags.dense_cap) {
    err << "error: " << problem.basis.qubit_count()
        << " qubits exceed the dense cap " << flags.dense_cap << "\n";
    return kExitDenseCap;
  }
  if (auto witness = commutation_witness(problem.sigma, problem.basis)) {
    err << "error: sigma does not commute with the projector: state "
        << witness->str() << " maps outside B\n";
    return kExitCommutation;
  }

  Circuit circuit = [&] {
    if (fs::path(circuit_path).extension() == ".json") {
      return circuit_from_json(read_json_file(circuit_path));
    }
    std::ifstream in(circuit_path);
    if (!in) {
      throw std::invalid_argument("cannot open file: " + circuit_path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return circuit_from_text(ss.str());
  }();

  double residual = verify_circuit(problem.sigma, problem.basis, problem.t,
                                   circuit, flags.dense_cap);
  if (residual > flags.tolerance) {
    err << "residual " << format_angle(residual) << " exceeds tolerance "
        << format_angle(flags.tolerance) << "\n";
    return kExitFailure;
  }
  out << format_angle(residual) << "\n";
  return kExitOk;
}

int cmd_estimate(const std::string& problem_path, const CommonFlags& flags,
                 std::ostream& out, std::ostream& err) {
  ProblemFile problem = problem_from_json(read_json_file(problem_path));
  SynthesisOptions options = to_options(flags, problem);
  options.verify = false;

  SynthesisReport report;
  try {
    report = synthesize(problem.sigma, problem.basis, problem.t, options);
  } catch (const CommutationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCommutation;
  }

  uint64_t direct = baseline_pauli_terms(problem.sigma, problem.basis);
  uint64_t by_parts = baseline_terms_by_parts(problem.sigma, problem.basis);
  uint64_t rot_t = rotation_t_cost(options.epsilon, options.t_model_constant);

  out << "baseline (Pauli evolution, model-based): terms=" << direct
      << " per-part terms=" << by_parts << " rotations=" << by_parts
      << " t_count=" << by_parts * rot_t << "\n";
  out << "compact (this synthesis, model-based): case="
      << to_string(report.kind) << " cx=" << report.resources.cx
      << " rotations=" << report.resources.rotation_count
      << " t_count=" << report.resources.t_count
      << " mcx=" << report.resources.mcx_count
      << " ancillas=" << report.resources.ancillas << "\n";

  json j = {{"baseline",
             {{"pauli_terms", direct},
              {"pauli_terms_by_part", by_parts},
              {"rotations", by_parts},
              {"t_count", by_parts * rot_t},
              {"model_based", true}}},
            {"compact", resources_to_json(report.resources)},
            {"case", to_string(report.kind)}};
  out << j.dump(2) << "\n";
  return kExitOk;
}

struct ExampleFlags {
  std::string x, y;
  uint32_t n_exc = 1;
  std::vector<uint32_t> occupied, virtuals;
  uint32_t total_qubits = 0;
  bool jordan_wigner = false;
  uint32_t n = 3;
  uint32_t k = 3;
  std::string pairs;
  std::vector<std::string> basis;
  std::vector<std::string> sigmas;
  std::vector<double> angles;
  double t = 0.5;
};

std::vector<std::pair<uint32_t, uint32_t>> parse_color_pairs(
    const std::string& text) {
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("color pairs look like i:j,i:j,...");
    }
    pairs.emplace_back(std::stoul(item.substr(0, colon)),
                       std::stoul(item.substr(colon + 1)));
  }
  return pairs;
}

int cmd_examples(const std::string& name, const ExampleFlags& ex,
                 const CommonFlags& flags, const std::string& requested_out,
                 std::ostream& out, std::ostream& err) {
  const std::vector<std::string> known = {"transposition", "excitation",
                                          "trace", "maxkcut", "lxmixer"};
  std::string prefix = requested_out.empty() ? name : requested_out;

  Strategy strategy = Strategy::automatic;
  if (!flags.strategy.empty()) {
    auto s = strategy_from_string(flags.strategy);
    if (!s) {
      err << "error: unknown strategy '" << flags.strategy << "'\n";
      return kExitSchema;
    }
    strategy = *s;
  }

  std::optional<ExampleSpec> spec;
  std::optional<Circuit> circuit;
  if (name == "transposition") {
    if (ex.x.empty() || ex.y.empty()) {
      err << "error: transposition requires --x and --y\n";
      return kExitSchema;
    }
    circuit = lower_transposition(BitString::parse(ex.x),
                                  BitString::parse(ex.y));
    ExampleSpec s;
    s.name = "transposition";
    s.parameters = {{"x", ex.x}, {"y", ex.y}};
    spec = std::move(s);
  } else if (name == "excitation") {
    std::vector<uint32_t> occupied = ex.occupied;
    std::vector<uint32_t> virtuals = ex.virtuals;
    if (occupied.empty() && virtuals.empty()) {
      for (uint32_t i = 0; i < ex.n_exc; ++i) {
        occupied.push_back(i);
        virtuals.push_back(ex.n_exc + i);
      }
    }
    uint32_t total = ex.total_qubits ? ex.total_qubits : 2 * ex.n_exc;
    spec = qubit_excitation(ex.n_exc, occupied, virtuals, total, ex.t,
                            ex.jordan_wigner);
    circuit = synthesize_example_circuit(*spec, Strategy::orbit);
  } else if (name == "trace") {
    spec = trace_gate_spec(ex.n, ex.t);
    circuit = trace_gate(ex.n, ex.t);
  } else if (name == "maxkcut") {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    if (!ex.pairs.empty()) {
      pairs = parse_color_pairs(ex.pairs);
    } else if (ex.k == 3) {
      pairs = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {2, 3}, {3, 2}};
    } else {
      uint32_t bits = 1;
      while ((uint32_t{1} << bits) < ex.k) {
        ++bits;
      }
      for (uint32_t c = 0; c < (uint32_t{1} << bits); ++c) {
        pairs.emplace_back(c, c);
      }
    }
    spec = maxkcut_oracle(ex.k, pairs, ex.t);
    circuit = synthesize_example_circuit(*spec, strategy);
  } else if (name == "lxmixer") {
    std::vector<std::string> basis = ex.basis;
    std::vector<std::string> sigmas = ex.sigmas;
    std::vector<double> angles = ex.angles;
    if (basis.empty()) {
      basis = {"0000", "1000", "0100", "1100", "0010", "1010"};
      sigmas = {"XIII"};
      angles = {ex.t};
    }
    if (angles.empty()) {
      angles.assign(sigmas.size(), ex.t);
    }
    std::vector<PauliString> generators;
    for (const auto& s : sigmas) {
      generators.push_back(PauliString::parse(s));
    }
    BasisSet b = BasisSet::from_strings(generators.at(0).size(), basis);
    spec = lx_mixer(b, generators, angles);
    circuit = synthesize_example_circuit(*spec, strategy);
  } else {
    err << "error: unknown example '" << name << "'; available:";
    for (const auto& k : known) {
      err << " " << k;
    }
    err << "\n";
    return kExitSchema;
  }

  write_file(prefix + ".spec.json", example_spec_to_json(*spec).dump(2) + "\n");
  Circuit lowered = lower_full(*circuit);
  write_file(prefix + ".circuit.txt", circuit_to_text(lowered));
  write_file(prefix + ".circuit.json", circuit_to_json(lowered).dump(2) + "\n");
  out << name << ": wrote " << prefix << ".spec.json, " << prefix
      << ".circuit.txt, " << prefix << ".circuit.json\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Compact circuits for projector-restricted Pauli evolution"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string requested_out;

  std::vector<std::string> synth_paths;
  auto* synth = app.add_subcommand("synth", "synthesize circuits for problems");
  synth->add_option("problems", synth_paths, "problem JSON files")->required();
  synth->add_option("--out", requested_out, "output prefix");
  synth->add_option("--strategy", flags.strategy,
                    "auto | orbit | general | cover");
  synth->add_option("--epsilon", flags.epsilon, "T-model precision");
  synth->add_option("--tolerance", flags.tolerance, "verification tolerance");
  synth->add_option("--dense-cap", flags.dense_cap, "max qubits for dense checks");
  synth->add_option("--t-model-constant", flags.t_model_constant,
                    "T-count model constant");
  synth->add_flag("--no-verify", flags.no_verify, "skip dense verification");

  std::string verify_problem, verify_circuit_path;
  auto* verify = app.add_subcommand("verify", "check a circuit against the oracle");
  verify->add_option("problem", verify_problem, "problem JSON")->required();
  verify->add_option("circuit", verify_circuit_path, "circuit file (.json or .txt)")
      ->required();
  verify->add_option("--tolerance", flags.tolerance, "acceptance tolerance");
  verify->add_option("--dense-cap", flags.dense_cap, "max qubits for dense checks");

  std::string estimate_problem;
  auto* estimate = app.add_subcommand("estimate", "compare against the Pauli baseline");
  estimate->add_option("problem", estimate_problem, "problem JSON")->required();
  estimate->add_option("--epsilon", flags.epsilon, "T-model precision");
  estimate->add_option("--strategy", flags.strategy,
                       "auto | orbit | general | cover");
  estimate->add_option("--t-model-constant", flags.t_model_constant,
                       "T-count model constant");

  std::string example_name;
  ExampleFlags ex;
  auto* examples = app.add_subcommand("examples", "generate built-in examples");
  examples->add_option("name", example_name,
                       "transposition | excitation | trace | maxkcut | lxmixer")
      ->required();
  examples->add_option("--out", requested_out, "output prefix");
  examples->add_option("--strategy", flags.strategy,
                       "auto | orbit | general | cover");
  examples->add_option("--x", ex.x, "transposition: first state");
  examples->add_option("--y", ex.y, "transposition: second state");
  examples->add_option("--n-exc", ex.n_exc, "excitation order");
  examples->add_option("--occupied", ex.occupied, "occupied indices");
  examples->add_option("--virtual", ex.virtuals, "virtual indices");
  examples->add_option("--total-qubits", ex.total_qubits, "register width");
  examples->add_flag("--jw", ex.jordan_wigner, "fermionic (Jordan-Wigner) variant");
  examples->add_option("--n", ex.n, "trace gate block size");
  examples->add_option("--k", ex.k, "number of colors");
  examples->add_option("--pairs", ex.pairs, "equivalent colors, i:j,i:j,...");
  examples->add_option("--basis", ex.basis, "mixer basis states");
  examples->add_option("--sigmas", ex.sigmas, "mixer generators");
  examples->add_option("--angles", ex.angles, "mixer angles");
  examples->add_option("--t", ex.t, "evolution angle");

  std::vector<const char*> argv;
  argv.push_back("projevo");
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitSchema;
  }

  try {
    if (synth->parsed()) {
      return cmd_synth(synth_paths, flags, requested_out, out, err);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_problem, verify_circuit_path, flags, out, err);
    }
    if (estimate->parsed()) {
      return cmd_estimate(estimate_problem, flags, out, err);
    }
    if (examples->parsed()) {
      return cmd_examples(example_name, ex, flags, requested_out, out, err);
    }
  } catch (const CommutationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCommutation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitSchema;
}

}  // namespace projevo
