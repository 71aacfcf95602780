// Copyright 2026 The qopt Authors
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

#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "cli_support.hpp"

using namespace qopt;
using namespace qopt::cli;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void add_problem_options(CLI::App* cmd, ProblemSource& src) {
  cmd->add_option("--example", src.example, "LamA example (Ex0p1 ... Ex2p4)");
  cmd->add_option("--input", src.input, "problem JSON (LamA/TRP spec, QUBO or build output)");
  cmd->add_option("--lama", src.lama, "LamA with full windows: T C E")->expected(3);
  cmd->add_option("--cities", src.cities, "generated TRP instance with this many cities");
  cmd->add_option("--layout", src.layout, "TRP city layout")->check(CLI::IsMember({"symmetric", "asymmetric"}));
  cmd->add_option("--city-seed", src.city_seed, "seed for asymmetric city placement");
  cmd->add_option("--rho", src.rho, "penalty weight (LamA default: minimal exact penalty)");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<double> parse_params(const std::string& text) {
  if (text.empty()) throw UsageError("--params is required");
  if (text.find(".json") != std::string::npos) {
    const json j = read_json(text);
    return (j.contains("best_params") ? j["best_params"] : j).get<std::vector<double>>();
  }
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

Circuit load_or_build_circuit(const std::string& circuit_file, const ProblemSource& src, const std::string& algo,
                              std::size_t layers, const std::string& params) {
  if (!circuit_file.empty()) return read_json(circuit_file).get<Circuit>();
  const Problem p = load_problem(src);
  return bound_circuit(p, algo, layers, parse_params(params));
}

CouplingMap load_topology(const std::string& text) {
  if (text.find(".json") != std::string::npos) return read_json(text).get<CouplingMap>();
  return CouplingMap::preset(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qopt: QUBO modeling, variational simulation, annealing and transpilation workbench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qopt 1.0.0");

  std::uint64_t seed = 0;
  std::uint64_t shots = 10000;
  std::size_t reads = 400;
  std::size_t grid = 50;
  std::size_t layers = 1;
  std::string out = "-";
  ProblemSource src;

  // build
  auto* build = app.add_subcommand("build", "emit problem JSON (spec, QCIO, QUBO, Ising)");
  add_problem_options(build, src);
  build->add_option("--out", out, "output file ('-' for stdout)");

  // solve-brute
  std::size_t cap = kDefaultBruteForceCap;
  auto* brute = app.add_subcommand("solve-brute", "exhaustive QUBO minimization");
  add_problem_options(brute, src);
  brute->add_option("--cap", cap, "largest bit count to enumerate");
  brute->add_option("--out", out, "output file");

  // landscape
  auto* land = app.add_subcommand("landscape", "p=1 QAOA cost landscape as CSV");
  add_problem_options(land, src);
  land->add_option("--grid", grid, "grid points per axis")->check(CLI::PositiveNumber);
  land->add_option("--shots", shots, "shots per grid point (0 = exact)");
  land->add_option("--seed", seed, "sampling seed");
  land->add_option("--out", out, "output CSV");
  bool land_exact = false;
  land->add_flag("--exact", land_exact, "exact expectation (same as --shots 0)");

  // train
  TrainSettings ts;
  std::string traces_out;
  auto* trn = app.add_subcommand("train", "multistart QAOA/VQE training");
  add_problem_options(trn, src);
  trn->add_option("--algo", ts.algo, "qaoa or vqe")->check(CLI::IsMember({"qaoa", "vqe"}));
  trn->add_option("--layers", layers, "QAOA p or VQE L");
  trn->add_option("--starts", ts.starts, "number of random starts");
  trn->add_option("--max-iter", ts.max_iter, "objective-call budget per start");
  trn->add_option("--train-shots", ts.train_shots, "sampled objective with this many shots (0 = exact)");
  trn->add_option("--seed", seed, "start seed");
  trn->add_option("--out", out, "output JSON");
  trn->add_option("--traces", traces_out, "per-run convergence CSV");

  // sample
  std::string algo = "qaoa";
  std::string params;
  std::size_t trials = 50;
  auto* smp = app.add_subcommand("sample", "sample a trained circuit and report quality metrics");
  add_problem_options(smp, src);
  smp->add_option("--algo", algo, "qaoa or vqe")->check(CLI::IsMember({"qaoa", "vqe"}));
  smp->add_option("--layers", layers, "QAOA p or VQE L");
  smp->add_option("--params", params, "comma list or train output JSON")->required();
  smp->add_option("--shots", shots, "number of shots");
  smp->add_option("--seed", seed, "sampling seed");
  smp->add_option("--baseline-trials", trials, "random statevectors for the baseline");
  smp->add_option("--out", out, "output JSON");

  // anneal
  std::string method = "sa";
  std::size_t sweeps = 1000;
  double anneal_time = 50.0;
  double dt = 0.01;
  auto* ann = app.add_subcommand("anneal", "simulated annealing reads or Trotterized annealing");
  add_problem_options(ann, src);
  ann->add_option("--method", method, "sa or trotter")->check(CLI::IsMember({"sa", "trotter"}));
  ann->add_option("--reads", reads, "SA reads");
  ann->add_option("--sweeps", sweeps, "SA sweeps per read");
  ann->add_option("--time", anneal_time, "Trotter anneal time");
  ann->add_option("--dt", dt, "Trotter step");
  ann->add_option("--seed", seed, "seed");
  ann->add_option("--out", out, "output JSON");

  // transpile
  std::string circuit_file, topology = "heavy-hex-27", basis = "cx", error_file, emit_file;
  std::size_t num_seeds = 1;
  std::vector<std::size_t> initial_layout;
  auto* tp = app.add_subcommand("transpile", "route, decompose, count two-qubit gates and score");
  add_problem_options(tp, src);
  tp->add_option("--circuit", circuit_file, "circuit JSON (else built from the problem)");
  tp->add_option("--algo", algo, "qaoa or vqe")->check(CLI::IsMember({"qaoa", "vqe"}));
  tp->add_option("--layers", layers, "QAOA p or VQE L");
  tp->add_option("--params", params, "comma list or train output JSON");
  tp->add_option("--topology", topology, "line:N, ring:N, full:N, heavy-hex-27 or topology JSON");
  tp->add_option("--basis", basis, "two-qubit basis")->check(CLI::IsMember({"cx", "cz", "ecr"}));
  tp->add_option("--error-map", error_file, "error-map JSON for the circuit score");
  tp->add_option("--initial-layout", initial_layout, "initial logical-to-physical layout");
  tp->add_option("--seed", seed, "first routing seed");
  tp->add_option("--seeds", num_seeds, "number of consecutive routing seeds")->check(CLI::PositiveNumber);
  tp->add_option("--emit-circuit", emit_file, "write the first routed, decomposed circuit JSON");
  tp->add_option("--out", out, "output JSON");

  // score
  std::string p_file, q_file;
  std::optional<double> c_opt;
  auto* sc = app.add_subcommand("score", "fidelity (and relative error) between two distributions");
  add_problem_options(sc, src);
  sc->add_option("p", p_file, "first distribution JSON (probs or counts)")->required();
  sc->add_option("q", q_file, "second distribution JSON")->required();
  sc->add_option("--c-opt", c_opt, "optimal cost for the relative error");
  sc->add_option("--out", out, "output JSON");

  // sweep
  std::string axis = "penalty";
  std::vector<double> values;
  double fixed_rho = 1.0;
  auto* sw = app.add_subcommand("sweep", "feasible/optimal percentages over a penalty or anneal-time grid");
  add_problem_options(sw, src);
  sw->add_option("--axis", axis, "penalty or time")->check(CLI::IsMember({"penalty", "time"}));
  sw->add_option("--values", values, "grid values (penalty weights or sweep counts)")->required();
  sw->add_option("--reads", reads, "reads per grid point");
  sw->add_option("--sweeps", sweeps, "sweeps per read on the penalty axis");
  sw->add_option("--fixed-rho", fixed_rho, "penalty on the time axis");
  sw->add_option("--seed", seed, "seed");
  sw->add_option("--out", out, "output CSV");

  // run
  std::string config_file;
  auto* run = app.add_subcommand("run", "execute an experiment configuration");
  run->add_option("config", config_file, "experiment config JSON")->required();
  run->add_option("--out", out, "result JSON (overrides outputs.result)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) {
      const Problem p = load_problem(src);
      json j = {{"schema_version", kSchemaVersion}};
      j.update(p.describe());
      if (p.lama) {
        const LamaModel m = build_lama(*p.lama);
        j["qcio"] = m.qcio;
        j["encoding"] = m.encoding;
        j["quio"] = build_quio(m.qcio, p.rho);
      }
      j["qubo"] = p.qubo;
      j["ising"] = to_ising(p.qubo);
      write_text(out, dump(j));
    } else if (*brute) {
      const Problem p = load_problem(src);
      const SolveReport r = brute_force_solve(p.qubo, cap);
      json j = solve_report_to_json(r, p.num_qubits());
      j["problem"] = p.describe();
      json decoded = json::array();
      for (Bits b : r.optimal_set) {
        json d = {{"bits", bits_to_string(b, p.num_qubits())}};
        if (p.lama) {
          const DecodedSchedule s = decode_lama(b, *p.lama);
          d["feasible"] = s.feasible;
          d["levels"] = s.schedule.levels;
        } else if (p.trp) {
          const DecodedRoute route = decode_trp(b, *p.trp);
          d["feasible"] = route.feasible;
          d["route"] = route.route.order;
          d["distance"] = route.distance;
        }
        decoded.push_back(d);
      }
      j["decoded"] = decoded;
      write_text(out, dump(j));
    } else if (*land) {
      const Problem p = load_problem(src);
      const Landscape l =
          cost_landscape(to_ising(p.qubo), {.resolution = grid, .shots = land_exact ? 0 : shots, .seed = seed});
      std::ostringstream os;
      write_landscape_csv(os, l);
      write_text(out, os.str());
    } else if (*trn) {
      const Problem p = load_problem(src);
      ts.layers = layers;
      ts.seed = seed;
      const Trained t = train(p, ts);
      json j = {{"schema_version", kSchemaVersion}, {"problem", p.describe()}};
      j.update(trained_to_json(t, ts));
      write_text(out, dump(j));
      if (!traces_out.empty()) {
        std::ostringstream os;
        write_traces_csv(os, t.report.traces);
        write_text(traces_out, os.str());
      }
    } else if (*smp) {
      const Problem p = load_problem(src);
      const std::vector<double> theta = parse_params(params);
      const StateVector state = circuit_state(p, algo, layers, theta);
      const SampleSet s = sample(state, shots, seed);
      json j = {{"schema_version", kSchemaVersion},
                {"problem", p.describe()},
                {"samples", s},
                {"quality", quality(p, state, s, trials, seed)}};
      write_text(out, dump(j));
    } else if (*ann) {
      const Problem p = load_problem(src);
      json j = {{"schema_version", kSchemaVersion}, {"problem", p.describe()}, {"method", method}};
      const double best = p.optimal_cost();
      const Decoder decoder = p.decoder ? p.decoder : Decoder([&](Bits b) { return Decoded{true, p.qubo.cost(b)}; });
      if (method == "sa") {
        SaConfig cfg;
        cfg.num_reads = reads;
        cfg.sweeps = sweeps;
        cfg.seed = seed;
        const SampleSet s = sa_sample(p.qubo, cfg);
        const SolutionRates r = solution_rates(s, decoder, best);
        j["samples"] = s;
        j["row"] = SweepRow{static_cast<double>(sweeps), r.feasible_pct, r.optimal_pct, s.shots};
      } else {
        const StateVector st = qa_trotter(to_ising(p.qubo), AnnealSchedule::linear(anneal_time), dt);
        const Distribution d = Distribution::from_state(st, 1e-12);
        double p_opt = 0.0, p_feas = 0.0;
        for (const auto& [b, prob] : d.probs) {
          const Decoded dec = decoder(b);
          if (dec.feasible) p_feas += prob;
          if (dec.feasible && std::abs(dec.cost - best) <= kOptimalityTol) p_opt += prob;
        }
        j["anneal_time"] = anneal_time;
        j["dt"] = dt;
        j["distribution"] = d;
        j["feasible_probability"] = p_feas;
        j["optimal_probability"] = p_opt;
      }
      write_text(out, dump(j));
    } else if (*tp) {
      const Circuit logical = load_or_build_circuit(circuit_file, src, algo, layers, params);
      const CouplingMap map = load_topology(topology);
      const Layout layout = initial_layout.empty() ? Layout::trivial(logical.num_qubits()) : Layout{initial_layout};
      std::optional<ErrorMap> errors;
      if (!error_file.empty()) errors = read_json(error_file).get<ErrorMap>();
      json records = json::array();
      for (std::size_t k = 0; k < num_seeds; ++k) {
        const std::uint64_t s = seed + k;
        const RoutedCircuit r = route(logical, map, layout, s);
        const Circuit physical = decompose(r.circuit, basis_from_name(basis));
        json rec = {{"seed", s},
                    {"swaps", r.swaps_inserted},
                    {"two_qubit_count", count_two_qubit(physical)},
                    {"instructions", physical.size()},
                    {"final_layout", r.final_layout.logical_to_physical}};
        if (errors) rec["circuit_score"] = circuit_score(physical, *errors);
        records.push_back(rec);
        if (k == 0 && !emit_file.empty()) write_text(emit_file, dump(json(physical)));
      }
      write_text(out, dump({{"schema_version", kSchemaVersion},
                            {"topology", map},
                            {"logical_two_qubit_gates",
                             std::count_if(logical.gates().begin(), logical.gates().end(),
                                           [](const Gate& g) { return g.qubits.size() == 2; })},
                            {"records", records}}));
    } else if (*sc) {
      const Distribution p = read_json(p_file).get<Distribution>();
      const Distribution q = read_json(q_file).get<Distribution>();
      json j = {{"schema_version", kSchemaVersion}, {"fidelity", hellinger_fidelity(p, q)}};
      const int sources = !src.example.empty() + !src.input.empty() + !src.lama.empty() + (src.cities > 0);
      if (sources > 0) {
        const Problem prob = load_problem(src);
        const double best = c_opt ? *c_opt : prob.optimal_cost();
        j["c_opt"] = best;
        j["relative_error_p"] = relative_error(p, prob.qubo, best);
        j["relative_error_q"] = relative_error(q, prob.qubo, best);
      }
      write_text(out, dump(j));
    } else if (*sw) {
      const Problem p = load_problem(src);
      InstanceFamily family;
      if (p.lama) {
        family = lama_family(*p.lama);
      } else if (p.trp) {
        family = trp_family(*p.trp);
      } else {
        throw UsageError("sweep needs a LamA or TRP problem");
      }
      SaConfig cfg;
      cfg.num_reads = reads;
      cfg.sweeps = sweeps;
      cfg.seed = seed;
      const auto rows = sweep(family, axis == "penalty" ? SweepAxis::Penalty : SweepAxis::AnnealTime, values, cfg,
                              src.rho ? *src.rho : fixed_rho);
      std::ostringstream os;
      write_sweep_csv(os, rows);
      write_text(out, os.str());
    } else if (*run) {
      const json config = read_json(config_file);
      json result;
      try {
        result = run_experiment(config);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid config: ") + e.what());
      }
      std::string target = out;
      if (target == "-" && config.contains("outputs") && config["outputs"].contains("result")) {
        target = config["outputs"]["result"].get<std::string>();
      }
      write_text(target, dump(result));
    }
  } catch (const UsageError& e) {
    std::cerr << "qopt: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qopt: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qopt: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
