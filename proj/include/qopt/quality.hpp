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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "qopt/bits.hpp"
#include "qopt/model.hpp"
#include "qopt/simulator.hpp"

namespace qopt {

/// Sparse probability distribution over bitstrings.
struct Distribution {
  std::map<Bits, double> probs;
  std::size_t num_bits = 0;

  /// Throws std::invalid_argument on negative entries or total mass off by
  /// more than tol.
  void validate(double tol = 1e-9) const;

  static Distribution from_samples(const SampleSet& samples);
  /// Exact |a_b|^2; entries below `cutoff` are dropped.
  static Distribution from_state(const StateVector& state, double cutoff = 0.0);
};

double hellinger_fidelity(const Distribution& p, const Distribution& q);

/// Expected QUBO cost under p.
double expected_cost(const Distribution& p, const QuboProblem& qubo);

struct RelativeError {
  double value = 0.0;
  /// Set when |c_opt| < 1e-12 and `value` is the absolute error instead.
  bool absolute_fallback = false;
};

inline constexpr double kZeroOptimumGuard = 1e-12;

/// |<cost>_p - c_opt| / |c_opt|.
RelativeError relative_error(const Distribution& p, const QuboProblem& qubo, double c_opt);

/// Mean relative error of `trials` Haar-like random states (normalized
/// complex-Gaussian amplitudes) on n qubits. Without c_opt the exact
/// minimum of the QUBO is used.
RelativeError random_baseline(std::size_t num_qubits, const QuboProblem& qubo, std::size_t trials,
                              std::uint64_t seed, std::optional<double> c_opt = std::nullopt);

struct Decoded {
  bool feasible = false;
  double cost = 0.0;
};

using Decoder = std::function<Decoded(Bits)>;

struct SolutionRates {
  double feasible_pct = 0.0;
  double optimal_pct = 0.0;
};

/// Share of reads that decode feasible, and feasible with cost == c_opt
/// (within 1e-9). Throws std::invalid_argument on an empty sample set.
SolutionRates solution_rates(const SampleSet& samples, const Decoder& decoder, double c_opt);

struct QualityReport {
  double fidelity = 0.0;
  RelativeError relative_error;
  RelativeError random_baseline;
  SolutionRates rates;
};

}  // namespace qopt
