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

#include "cli_support.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qopt::cli {

namespace {

double default_lama_rho(const LamaSpec& spec) {
  const LamaModel model = build_lama(spec);
  try {
    return min_penalty(model.qcio, model.encoding);
  } catch (const std::length_error&) {
    throw std::runtime_error("instance too large to scan for the minimal penalty; pass --rho");
  }
}

Problem make_lama(const LamaSpec& spec, std::optional<double> rho) {
  Problem p;
  p.kind = "lama";
  p.lama = spec;
  p.rho = rho ? *rho : default_lama_rho(spec);
  p.qubo = lama_qubo(spec, p.rho);
  p.decoder = lama_decoder(spec, p.qubo);
  return p;
}

Problem make_trp(TrpSpec spec, std::optional<double> rho) {
  if (rho) spec.rho = *rho;
  Problem p;
  p.kind = "trp";
  p.rho = spec.rho;
  p.qubo = build_trp(spec);
  p.decoder = trp_decoder(spec, p.qubo);
  p.trp = std::move(spec);
  return p;
}

Problem make_qubo(QuboProblem q) {
  Problem p;
  p.kind = "qubo";
  p.qubo = std::move(q);
  return p;
}

Problem from_json_with_rho(const json& j, std::optional<double> rho) {
  if (j.contains("kind") && j.contains("spec")) {
    const std::string kind = j["kind"].get<std::string>();
    std::optional<double> r = rho;
    if (!r && j.contains("rho")) r = j["rho"].get<double>();
    if (kind == "lama") return make_lama(j["spec"].get<LamaSpec>(), r);
    if (kind == "trp") return make_trp(j["spec"].get<TrpSpec>(), r);
  }
  if (j.contains("kind") && j["kind"] == "qubo" && j.contains("qubo")) return make_qubo(j["qubo"].get<QuboProblem>());
  if (j.contains("num_timeslots")) return make_lama(j.get<LamaSpec>(), rho);
  if (j.contains("num_cities")) return make_trp(j.get<TrpSpec>(), rho);
  if (j.contains("Q")) return make_qubo(j.get<QuboProblem>());
  throw std::invalid_argument("input JSON is not a LamA spec, TRP spec, QUBO or build output");
}

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

double Problem::optimal_cost() const {
  if (lama) return lama_family(*lama)(rho).optimal_cost;
  if (trp) return trp_route_oracle(*trp, qubo).optimal_cost;
  return brute_force_solve(qubo).optimal_cost;
}

Problem Problem::with_rho(double r) const {
  if (lama) return make_lama(*lama, r);
  if (trp) return make_trp(*trp, r);
  throw std::invalid_argument("penalty grids need a LamA or TRP problem");
}

json Problem::describe() const {
  json j = {{"kind", kind}, {"num_qubits", num_qubits()}};
  if (lama) j["spec"] = *lama;
  if (trp) j["spec"] = *trp;
  if (kind != "qubo") j["rho"] = rho;
  return j;
}

Problem load_problem(const json& j) { return from_json_with_rho(j, std::nullopt); }

Problem load_problem(const ProblemSource& src) {
  const int sources = !src.example.empty() + !src.input.empty() + !src.lama.empty() + (src.cities > 0);
  if (sources != 1) {
    throw std::invalid_argument("choose exactly one problem source: --example, --input, --lama or --cities");
  }
  if (!src.example.empty()) return make_lama(lama_example(src.example), src.rho);
  if (!src.lama.empty()) {
    if (src.lama.size() != 3 || src.lama[0] < 1 || src.lama[1] < 1) {
      throw std::invalid_argument("--lama expects T C E");
    }
    return make_lama(lama_full_window(static_cast<std::size_t>(src.lama[0]), static_cast<std::size_t>(src.lama[1]),
                                      src.lama[2]),
                     src.rho);
  }
  if (src.cities > 0) {
    return make_trp(gen_cities(src.cities, layout_from_name(src.layout), src.city_seed), src.rho);
  }
  return from_json_with_rho(read_json(src.input), src.rho);
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string resolve_output(const std::string& path) {
  if (path.empty() || path == "-") return "-";
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("QOPT_OUTPUT_DIR"); dir != nullptr && *dir != '\0') p = dir / p;
  }
  return p.string();
}

void write_text(const std::string& path, const std::string& text) {
  const std::string target = resolve_output(path);
  if (target == "-") {
    std::cout << text;
    return;
  }
  const std::filesystem::path p(target);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write '" + target + "'");
  out << text;
}

Circuit bound_circuit(const Problem& problem, const std::string& algo, std::size_t layers,
                      std::span<const double> params) {
  const std::size_t n = problem.num_qubits();
  Circuit c = algo == "qaoa" ? qaoa_circuit(to_ising(problem.qubo), layers).bind(params)
                             : vqe_circuit(n, layers).bind(params);
  for (std::size_t q = 0; q < n; ++q) c.measure(q);
  return c;
}

StateVector circuit_state(const Problem& problem, const std::string& algo, std::size_t layers,
                          std::span<const double> params) {
  const std::size_t n = problem.num_qubits();
  if (algo == "qaoa") {
    const QaoaParams qp = QaoaParams::from_flat(params);
    if (qp.layers() != layers) throw std::invalid_argument("QAOA parameter count does not match layers");
    return qaoa_state_fast(to_ising(problem.qubo), qp);
  }
  if (algo == "vqe") return vqe_state(n, layers, params);
  throw std::invalid_argument("unknown variational algorithm '" + algo + "'");
}

Trained train(const Problem& problem, const TrainSettings& s) {
  if (s.layers < 1) throw std::invalid_argument("layers must be at least 1");
  const std::size_t n = problem.num_qubits();
  std::vector<double> diag = cost_diagonal(to_ising(problem.qubo));
  const EnergyOptions eo{s.train_shots, s.seed};
  EnergyFn energy;
  StartSampler sampler;
  if (s.algo == "qaoa") {
    energy = qaoa_energy(std::move(diag), n, eo);
    sampler = uniform_box(qaoa_parameter_count(s.layers), 0.0, std::numbers::pi);
  } else if (s.algo == "vqe") {
    energy = vqe_energy(std::move(diag), n, s.layers, eo);
    sampler = uniform_box(vqe_parameter_count(n, s.layers), 0.0, 2.0 * std::numbers::pi);
  } else {
    throw std::invalid_argument("unknown variational algorithm '" + s.algo + "'");
  }
  Trained t;
  t.report = multistart(energy, s.starts, sampler, s.seed, {.max_iter = s.max_iter});
  t.state = circuit_state(problem, s.algo, s.layers, t.report.best_params);
  t.circuit = bound_circuit(problem, s.algo, s.layers, t.report.best_params);
  return t;
}

json trained_to_json(const Trained& t, const TrainSettings& s) {
  json finals = json::array();
  json terminations = json::array();
  json calls = json::array();
  for (const OptTrace& tr : t.report.traces) {
    finals.push_back(tr.final_cost);
    terminations.push_back(std::string(termination_name(tr.termination)));
    calls.push_back(tr.iterates.size());
  }
  return {{"algorithm", s.algo},
          {"layers", s.layers},
          {"starts", s.starts},
          {"seed", s.seed},
          {"best_cost", t.report.best_cost},
          {"best_params", t.report.best_params},
          {"best_index", t.report.best_index},
          {"final_costs", finals},
          {"terminations", terminations},
          {"objective_calls", calls}};
}

QualityReport quality(const Problem& problem, const StateVector& exact, const SampleSet& samples,
                      std::size_t baseline_trials, std::uint64_t seed) {
  const double c_opt = problem.optimal_cost();
  const Distribution empirical = Distribution::from_samples(samples);
  QualityReport r;
  r.fidelity = hellinger_fidelity(empirical, Distribution::from_state(exact));
  r.relative_error = relative_error(empirical, problem.qubo, c_opt);
  r.random_baseline = random_baseline(problem.num_qubits(), problem.qubo, baseline_trials, seed, c_opt);
  const Decoder decoder =
      problem.decoder ? problem.decoder : Decoder([&](Bits b) { return Decoded{true, problem.qubo.cost(b)}; });
  r.rates = solution_rates(samples, decoder, c_opt);
  return r;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------

namespace {

struct ExperimentConfig {
  ProblemSource source;
  std::string algorithm;
  std::size_t layers = 1;
  std::uint64_t shots = 10000;
  std::vector<std::uint64_t> seeds;
  std::vector<double> penalties;
  std::size_t starts = 50;
  std::size_t max_iter = 1000;
  std::uint64_t train_seed = 0;
  std::string topology;
  std::string basis = "cx";
  std::string error_map;
  std::size_t reads = 400;
  std::size_t sweeps = 1000;
  double anneal_time = 50.0;
  double dt = 0.01;
  std::size_t baseline_trials = 50;
};

ExperimentConfig parse_config(const json& j) {
  static const std::vector<std::string> known = {"problem",  "algorithm", "layers",     "shots",   "seeds",
                                                 "penalties", "starts",   "max_iter",   "train_seed", "topology",
                                                 "basis",    "error_map", "reads",      "sweeps",  "anneal_time",
                                                 "dt",       "baseline_trials", "outputs"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  ExperimentConfig c;
  const json& p = j.at("problem");
  c.source.example = p.value("example", "");
  c.source.input = p.value("input", "");
  if (p.contains("lama")) c.source.lama = p["lama"].get<std::vector<int>>();
  c.source.cities = p.value("cities", std::size_t{0});
  c.source.layout = p.value("layout", "symmetric");
  c.source.city_seed = p.value("city_seed", std::uint64_t{0});
  if (p.contains("rho")) c.source.rho = p["rho"].get<double>();
  c.algorithm = j.at("algorithm").get<std::string>();
  const std::vector<std::string> algos{"qaoa", "vqe", "sa", "qa-trotter", "brute"};
  if (std::find(algos.begin(), algos.end(), c.algorithm) == algos.end()) {
    throw std::invalid_argument("unknown algorithm '" + c.algorithm + "'");
  }
  c.layers = j.value("layers", c.layers);
  c.shots = j.value("shots", c.shots);
  c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  if (c.seeds.empty()) throw std::invalid_argument("config needs at least one seed");
  c.penalties = j.value("penalties", std::vector<double>{});
  c.starts = j.value("starts", c.starts);
  c.max_iter = j.value("max_iter", c.max_iter);
  c.train_seed = j.value("train_seed", c.seeds.front());
  c.topology = j.value("topology", "");
  c.basis = j.value("basis", c.basis);
  c.error_map = j.value("error_map", "");
  c.reads = j.value("reads", c.reads);
  c.sweeps = j.value("sweeps", c.sweeps);
  c.anneal_time = j.value("anneal_time", c.anneal_time);
  c.dt = j.value("dt", c.dt);
  c.baseline_trials = j.value("baseline_trials", c.baseline_trials);
  if (!c.source.input.empty() && !std::filesystem::exists(c.source.input)) {
    throw std::invalid_argument("problem input '" + c.source.input + "' does not exist");
  }
  if (!c.error_map.empty() && !std::filesystem::exists(c.error_map)) {
    throw std::invalid_argument("error map '" + c.error_map + "' does not exist");
  }
  if (!c.error_map.empty() && c.topology.empty()) throw std::invalid_argument("error_map requires a topology");
  basis_from_name(c.basis);
  return c;
}

json quality_json(const QualityReport& q) { return json(q); }

void add_transpile_metrics(json& rec, const Circuit& logical, const ExperimentConfig& c, const CouplingMap& map,
                           const std::optional<ErrorMap>& errors, std::uint64_t seed) {
  const RoutedCircuit routed = route(logical, map, Layout::trivial(logical.num_qubits()), seed);
  const Circuit physical = decompose(routed.circuit, basis_from_name(c.basis));
  rec["swaps"] = routed.swaps_inserted;
  rec["two_qubit_count"] = count_two_qubit(physical);
  rec["final_layout"] = routed.final_layout.logical_to_physical;
  if (errors) rec["circuit_score"] = circuit_score(physical, *errors);
}

}  // namespace

json run_experiment(const json& config) {
  const ExperimentConfig c = parse_config(config);
  const Problem base = load_problem(c.source);
  std::vector<Problem> instances;
  if (c.penalties.empty()) {
    instances.push_back(base);
  } else {
    for (double rho : c.penalties) instances.push_back(base.with_rho(rho));
  }

  std::optional<CouplingMap> map;
  std::optional<ErrorMap> errors;
  if (!c.topology.empty()) {
    map = CouplingMap::preset(c.topology);
    if (map->num_qubits() < base.num_qubits()) throw std::invalid_argument("topology has too few qubits");
  }
  if (!c.error_map.empty()) errors = read_json(c.error_map).get<ErrorMap>();

  json result = {{"schema_version", kSchemaVersion}};
  json provenance = {{"config_hash", fnv1a(config.dump())}, {"seeds", c.seeds}, {"timestamp", timestamp_utc()}};
  json instance_info = json::array();
  json records = json::array();

  for (const Problem& inst : instances) {
    json info = inst.describe();
    std::optional<Trained> trained;
    std::optional<StateVector> trotter;
    std::optional<SolveReport> brute;
    try {
      if (c.algorithm == "qaoa" || c.algorithm == "vqe") {
        const TrainSettings ts{c.algorithm, c.layers, c.starts, c.max_iter, 0, c.train_seed};
        trained = train(inst, ts);
        info["training"] = trained_to_json(*trained, ts);
      } else if (c.algorithm == "qa-trotter") {
        trotter = qa_trotter(to_ising(inst.qubo), AnnealSchedule::linear(c.anneal_time), c.dt);
      } else if (c.algorithm == "brute") {
        brute = brute_force_solve(inst.qubo);
        info["solve"] = solve_report_to_json(*brute, inst.num_qubits());
      }
    } catch (const std::exception& e) {
      info["error"] = e.what();
    }
    instance_info.push_back(info);

    for (std::uint64_t seed : c.seeds) {
      json rec = {{"seed", seed}, {"rho", inst.rho}};
      try {
        if (info.contains("error")) throw std::runtime_error(info["error"].get<std::string>());
        if (trained) {
          if (map) add_transpile_metrics(rec, trained->circuit, c, *map, errors, seed);
          const SampleSet s = sample(trained->state, c.shots, seed);
          rec["quality"] = quality_json(quality(inst, trained->state, s, c.baseline_trials, seed));
        } else if (trotter) {
          const SampleSet s = sample(*trotter, c.shots, seed);
          rec["quality"] = quality_json(quality(inst, *trotter, s, c.baseline_trials, seed));
        } else if (brute) {
          rec["optimal_cost"] = brute->optimal_cost;
          rec["optimal_count"] = brute->optimal_set.size();
        } else {
          SaConfig cfg;
          cfg.num_reads = c.reads;
          cfg.sweeps = c.sweeps;
          cfg.seed = seed;
          const SampleSet s = sa_sample(inst.qubo, cfg);
          const Decoder decoder =
              inst.decoder ? inst.decoder : Decoder([&](Bits b) { return Decoded{true, inst.qubo.cost(b)}; });
          const SolutionRates r = solution_rates(s, decoder, inst.optimal_cost());
          rec["feasible_pct"] = r.feasible_pct;
          rec["optimal_pct"] = r.optimal_pct;
          rec["reads"] = s.shots;
        }
        rec["status"] = "ok";
      } catch (const std::exception& e) {
        rec["status"] = "error";
        rec["error"] = e.what();
      }
      records.push_back(std::move(rec));
    }
  }
  result["instances"] = instance_info;
  result["records"] = records;
  result["provenance"] = provenance;
  return result;
}

}  // namespace qopt::cli
