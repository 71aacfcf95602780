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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qopt/io.hpp"

namespace qopt::cli {

/// Where a problem comes from. Exactly one source must be set.
struct ProblemSource {
  std::string example;     // LamA example name, e.g. "Ex0p2"
  std::string input;       // JSON file: LamA/TRP spec, QUBO, or `build` output
  std::vector<int> lama;   // T, C, E (full availability windows)
  std::size_t cities = 0;  // generated TRP instance
  std::string layout = "symmetric";
  std::uint64_t city_seed = 0;
  std::optional<double> rho;
};

struct Problem {
  std::string kind;  // "lama", "trp" or "qubo"
  std::optional<LamaSpec> lama;
  std::optional<TrpSpec> trp;
  QuboProblem qubo;
  double rho = 0.0;
  Decoder decoder;  // empty for bare QUBOs

  std::size_t num_qubits() const { return qubo.num_vars(); }
  /// Optimal QUBO cost over feasible bitstrings (all bitstrings for a bare QUBO).
  double optimal_cost() const;
  /// Rebuilds the QUBO at another penalty weight.
  Problem with_rho(double rho) const;
  json describe() const;
};

Problem load_problem(const ProblemSource& src);
Problem load_problem(const json& j);

json read_json(const std::string& path);
/// Writes to stdout for "-" or empty; relative paths resolve against
/// $QOPT_OUTPUT_DIR when set.
void write_text(const std::string& path, const std::string& text);
std::string resolve_output(const std::string& path);

struct TrainSettings {
  std::string algo = "qaoa";
  std::size_t layers = 1;
  std::size_t starts = 50;
  std::size_t max_iter = 1000;
  std::uint64_t train_shots = 0;
  std::uint64_t seed = 0;
};

struct Trained {
  MultiStartReport report;
  StateVector state{1};
  Circuit circuit;  // bound, with final measurements
};

Trained train(const Problem& problem, const TrainSettings& settings);
json trained_to_json(const Trained& t, const TrainSettings& settings);
Circuit bound_circuit(const Problem& problem, const std::string& algo, std::size_t layers,
                      std::span<const double> params);
StateVector circuit_state(const Problem& problem, const std::string& algo, std::size_t layers,
                          std::span<const double> params);

QualityReport quality(const Problem& problem, const StateVector& exact, const SampleSet& samples,
                      std::size_t baseline_trials, std::uint64_t seed);

/// Executes an experiment configuration and returns the result payload.
json run_experiment(const json& config);

std::uint64_t fnv1a(const std::string& text);

}  // namespace qopt::cli
