// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/cli/commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "photonchain/circuit/compiler.h"
#include "photonchain/fock/fock_state.h"
#include "photonchain/klm/cz_gate.h"

namespace photonchain::cli {

namespace {

using nlohmann::json;

class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UserError("cannot write '" + out_path + "'");
  f << text;
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

struct Flags {
  std::string circuit;
  int gates = 100;
  int n = 3;
  int inert = 0;
  int trials = 1000;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  std::string out;
  std::int64_t max_steps = 1'000'000;
  int threads = 0;
  bool parallel_teleport = false;
  std::string mode = "full-build";
  int n_max = 3;
};

std::uint64_t require_seed(const Flags& f) {
  if (!f.seed) throw UserError("--seed is required for stochastic commands");
  return *f.seed;
}

int cmd_parse(const Flags& f, std::ostream& out) {
  circuit::Circuit c = circuit::parse(read_file(f.circuit));
  emit(circuit::to_json(c).dump(2) + "\n", f.out, out);
  return kExitOk;
}

int cmd_run(const Flags& f, std::ostream& out) {
  const std::uint64_t seed = require_seed(f);
  circuit::Circuit c = circuit::parse(read_file(f.circuit));
  circuit::CompileOptions opts;
  opts.inert_links_per_gate = f.inert;
  opts.n_order = f.n;
  opts.mode = f.mode == "eager" ? linked::ScheduleMode::eager : linked::ScheduleMode::full_build;
  linked::LinkedBlueprint bp = circuit::compile(c, opts);

  // Random product input, then Bell outcomes, all from the seed.
  Rng rng(seed);
  std::vector<linked::QubitInput> inputs;
  for (int q = 0; q < c.num_qubits; ++q) {
    double theta = std::acos(1 - 2 * uniform01(rng));
    double phi = 2 * std::numbers::pi * uniform01(rng);
    inputs.push_back({std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)});
  }
  linked::RandomSelector selector(rng);
  linked::ExecuteResult r = linked::execute(bp, inputs, selector);
  std::vector<linked::Complex> expected = circuit::simulate(c, inputs);
  linked::Complex overlap = 0;
  for (std::size_t i = 0; i < expected.size(); ++i) overlap += std::conj(expected[i]) * r.output[i];
  const double fidelity = std::norm(overlap);

  std::ostringstream s;
  if (f.format == "json") {
    json amps = json::array();
    for (std::size_t i = 0; i < r.output.size(); ++i) {
      amps.push_back({{"index", i}, {"re", r.output[i].real()}, {"im", r.output[i].imag()}});
    }
    json log = json::array();
    for (const auto& e : r.log) log.push_back(linked::to_json(e));
    json j = {{"blueprint", linked::to_json(bp)}, {"output", amps}, {"log", log},
              {"fidelity", fidelity}, {"peak_live_qubits", r.peak_live_qubits}};
    s << j.dump(2) << "\n";
  } else if (f.format == "text") {
    s << "output amplitudes (bit q = qubit q):\n";
    for (std::size_t i = 0; i < r.output.size(); ++i) {
      s << "  " << i << ": " << fixed(r.output[i].real(), 9) << " " << fixed(r.output[i].imag(), 9)
        << "i\n";
    }
    s << "outcome log:\n";
    for (const auto& e : r.log) s << linked::to_json(e).dump() << "\n";
    s << "fidelity vs direct simulation: " << fixed(fidelity, 9) << "\n";
  } else {
    throw UserError("run supports --format json or text");
  }
  emit(s.str(), f.out, out);
  return fidelity > 1 - 1e-9 ? kExitOk : kExitInternalError;
}

int cmd_cost(const Flags& f, std::ostream& out) {
  const std::uint64_t seed = require_seed(f);
  int gates = f.gates;
  if (!f.circuit.empty()) {
    gates = circuit::parse(read_file(f.circuit)).cz_count();
    if (gates == 0) throw UserError("circuit has no cz gates to cost");
  }
  cost::ConstructionPolicy policy;
  policy.n_order = f.n;
  policy.inert_links_per_gate = f.inert;
  policy.sequential_teleport = !f.parallel_teleport;
  policy.check();
  cost::SimulationOptions opts;
  opts.max_steps = f.max_steps;
  opts.threads = f.threads;
  cost::CostReport r = cost::simulate_build(gates, policy, f.trials, seed, opts);
  auto ref = reference_cost(policy);

  std::string text;
  if (f.format == "json") {
    text = cost::to_json(r, ref).dump(2) + "\n";
  } else if (f.format == "csv") {
    text = cost::to_csv(r);
  } else if (f.format == "text") {
    std::ostringstream s;
    s << "policy: n=" << policy.n_order << " inert=" << policy.inert_links_per_gate
      << " p=" << fixed(policy.p(), 6) << (policy.sequential_teleport ? " sequential" : " parallel")
      << "\n";
    s << "logical gates per trial: " << gates << ", trials: " << f.trials << ", seed: " << seed << "\n";
    s << "mean CZ-equivalents per logical gate: " << fixed(r.mean, 3) << " (stderr "
      << fixed(r.stderr_mean, 3) << ", reference " << (ref ? fixed(*ref, 0) : "n/a") << ")\n";
    auto d = cost::drift_analysis(policy);
    s << "stationary drift: " << fixed(d.drift, 6) << " gates/attempt, asymptotic cost "
      << (d.drift > 0 ? fixed(d.cost_per_gate, 3) : "unbounded") << "\n";
    s << "truncated trials: " << r.truncated << "\n";
    text = s.str();
  } else {
    throw UserError("unknown --format '" + f.format + "'");
  }
  emit(text, f.out, out);
  return kExitOk;
}

int cmd_verify_klm(const Flags& f, std::ostream& out) {
  if (f.n_max < 1) throw UserError("--n-max must be >= 1");
  // The process check runs on a Choi state: 4 reference/input photons + 2n ancilla.
  const int needed = 4 + 2 * f.n_max;
  if (needed > fock::kDefaultPhotonBudget) {
    throw UserError("capability error: n=" + std::to_string(f.n_max) + " needs " +
                    std::to_string(needed) + " photons, budget is " +
                    std::to_string(fock::kDefaultPhotonBudget));
  }
  json rows = json::array();
  std::ostringstream s;
  s << "n  teleport      n/(n+1)       delta     gate          n^2/(n+1)^2   delta     op-dev\n";
  for (int n = 1; n <= f.n_max; ++n) {
    auto exact = klm::success_probability(n);
    double tel = klm::enumerate_teleport(n, {0.6, 0.0}, {0.0, 0.8}).success_probability;
    auto cz = klm::enumerate_cz_process(n);
    double dt = std::abs(tel - exact.teleport.value());
    double dg = std::abs(cz.success_probability - exact.gate.value());
    rows.push_back({{"n", n},
                    {"teleport", tel},
                    {"teleport_exact", exact.teleport.value()},
                    {"gate", cz.success_probability},
                    {"gate_exact", exact.gate.value()},
                    {"operator_deviation", cz.max_operator_deviation}});
    char line[160];
    std::snprintf(line, sizeof line, "%-2d %.10f  %.10f  %.1e  %.10f  %.10f  %.1e  %.1e\n", n, tel,
                  exact.teleport.value(), dt, cz.success_probability, exact.gate.value(), dg,
                  cz.max_operator_deviation);
    s << line;
  }
  emit(f.format == "json" ? rows.dump(2) + "\n" : s.str(), f.out, out);
  return kExitOk;
}

}  // namespace

std::optional<double> reference_cost(const cost::ConstructionPolicy& p) {
  if (p.basic_gate_prob || !p.sequential_teleport) return std::nullopt;
  const int n = p.n_order, k = p.inert_links_per_gate;
  if (n == 4 && k == 0) return 15;
  if (n == 3 && k == 1) return 23;
  if (n == 3 && k == 0) return 220;
  if (n == 2 && k == 6) return 220;
  return std::nullopt;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linked photon-chain construction and execution toolkit", "photonchain"};
  app.require_subcommand(1);
  Flags f;
  std::uint64_t seed = 0;

  auto add_seed = [&](CLI::App* c) { return c->add_option("--seed", seed, "Master seed (required)"); };
  auto add_output = [&](CLI::App* c, std::vector<std::string> formats) {
    c->add_option("--format", f.format, "Output format")->check(CLI::IsMember(formats));
    c->add_option("--out", f.out, "Write output to PATH instead of stdout");
  };

  auto* parse = app.add_subcommand("parse", "Parse a circuit file and print its AST as JSON");
  parse->add_option("--circuit", f.circuit, "Circuit file")->required();
  parse->add_option("--out", f.out, "Write output to PATH");

  auto* run = app.add_subcommand("run", "Compile and execute a circuit on a linked state");
  run->add_option("--circuit", f.circuit, "Circuit file")->required();
  auto* run_seed = add_seed(run);
  run->add_option("--n", f.n, "Teleportation order recorded in the blueprint")->check(CLI::PositiveNumber);
  run->add_option("--inert", f.inert, "Inert links per gate")->check(CLI::NonNegativeNumber);
  run->add_option("--mode", f.mode, "Schedule mode")->check(CLI::IsMember({"eager", "full-build"}));
  add_output(run, {"json", "text"});

  auto* cost_cmd = app.add_subcommand("cost", "Monte Carlo cost of building a two-qubit linked state");
  auto* circ = cost_cmd->add_option("--circuit", f.circuit, "Cost the circuit's CZ count");
  auto* gates = cost_cmd->add_option("--gates", f.gates, "Logical gates per trial")->check(CLI::PositiveNumber);
  circ->excludes(gates);
  cost_cmd->add_option("--n", f.n, "Teleportation order n")->check(CLI::PositiveNumber);
  cost_cmd->add_option("--inert", f.inert, "Inert links per gate")->check(CLI::NonNegativeNumber);
  cost_cmd->add_option("--trials", f.trials, "Number of trials")->check(CLI::PositiveNumber);
  auto* cost_seed = add_seed(cost_cmd);
  cost_cmd->add_option("--max-steps", f.max_steps, "Attempt ceiling per trial")->check(CLI::PositiveNumber);
  cost_cmd->add_option("--threads", f.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  cost_cmd->add_flag("--parallel-teleport", f.parallel_teleport, "Run both gate teleports unconditionally");
  add_output(cost_cmd, {"json", "csv", "text"});

  auto* verify = app.add_subcommand("verify-klm", "Enumerate teleport and CZ success probabilities");
  verify->add_option("--n-max", f.n_max, "Largest order to check");
  verify->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", f.out, "Write output to PATH");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitUserError;
  }
  if (run_seed->count() || cost_seed->count()) f.seed = seed;

  try {
    if (parse->parsed()) return cmd_parse(f, out);
    if (run->parsed()) return cmd_run(f, out);
    if (cost_cmd->parsed()) return cmd_cost(f, out);
    if (verify->parsed()) return cmd_verify_klm(f, out);
  } catch (const circuit::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const UserError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInternalError;
}

}  // namespace photonchain::cli
