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

#include "qopt/quality.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "qopt/optimizer.hpp"

namespace qopt {

void Distribution::validate(double tol) const {
  double total = 0.0;
  for (const auto& [b, p] : probs) {
    if (p < 0.0 || !std::isfinite(p)) throw std::invalid_argument("distribution has a negative or non-finite entry");
    total += p;
  }
  if (std::abs(total - 1.0) > tol) {
    throw std::invalid_argument("distribution is not normalized (total " + std::to_string(total) + ")");
  }
}

Distribution Distribution::from_samples(const SampleSet& samples) {
  if (samples.shots == 0) throw std::invalid_argument("empty sample set");
  Distribution d;
  d.num_bits = samples.num_bits;
  const double shots = static_cast<double>(samples.shots);
  for (const auto& [b, n] : samples.counts) d.probs[b] = static_cast<double>(n) / shots;
  return d;
}

Distribution Distribution::from_state(const StateVector& state, double cutoff) {
  Distribution d;
  d.num_bits = state.num_qubits();
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p > cutoff || (cutoff == 0.0 && p > 0.0)) d.probs[i] = p;
  }
  return d;
}

double hellinger_fidelity(const Distribution& p, const Distribution& q) {
  p.validate();
  q.validate();
  double overlap = 0.0;
  for (const auto& [b, pb] : p.probs) {
    if (auto it = q.probs.find(b); it != q.probs.end()) overlap += std::sqrt(pb * it->second);
  }
  return std::min(1.0, overlap * overlap);
}

double expected_cost(const Distribution& p, const QuboProblem& qubo) {
  double e = 0.0;
  for (const auto& [b, pb] : p.probs) e += pb * qubo.cost(b);
  return e;
}

namespace {

RelativeError relative_from_mean(double mean, double c_opt) {
  const double gap = std::abs(mean - c_opt);
  if (std::abs(c_opt) < kZeroOptimumGuard) return {gap, true};
  return {gap / std::abs(c_opt), false};
}

}  // namespace

RelativeError relative_error(const Distribution& p, const QuboProblem& qubo, double c_opt) {
  p.validate();
  return relative_from_mean(expected_cost(p, qubo), c_opt);
}

RelativeError random_baseline(std::size_t num_qubits, const QuboProblem& qubo, std::size_t trials,
                              std::uint64_t seed, std::optional<double> c_opt_in) {
  if (trials == 0) throw std::invalid_argument("random baseline needs at least one trial");
  if (qubo.num_vars() != num_qubits) throw std::invalid_argument("qubit count does not match QUBO");
  const std::vector<double> costs = qubo_cost_table(qubo);
  const double c_opt = c_opt_in ? *c_opt_in : *std::min_element(costs.begin(), costs.end());
  RelativeError mean;
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng = stream_rng(seed, t);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> weights(costs.size());
    double total = 0.0;
    for (double& w : weights) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      w = re * re + im * im;
      total += w;
    }
    double e = 0.0;
    for (std::size_t b = 0; b < costs.size(); ++b) e += weights[b] / total * costs[b];
    const RelativeError r = relative_from_mean(e, c_opt);
    mean.value += r.value / static_cast<double>(trials);
    mean.absolute_fallback = r.absolute_fallback;
  }
  return mean;
}

SolutionRates solution_rates(const SampleSet& samples, const Decoder& decoder, double c_opt) {
  if (samples.shots == 0) throw std::invalid_argument("empty sample set");
  std::uint64_t feasible = 0;
  std::uint64_t optimal = 0;
  const double tol = kOptimalityTol * std::max(1.0, std::abs(c_opt));
  for (const auto& [b, n] : samples.counts) {
    const Decoded d = decoder(b);
    if (!d.feasible) continue;
    feasible += n;
    if (std::abs(d.cost - c_opt) <= tol) optimal += n;
  }
  const double shots = static_cast<double>(samples.shots);
  return {100.0 * static_cast<double>(feasible) / shots, 100.0 * static_cast<double>(optimal) / shots};
}

}  // namespace qopt
