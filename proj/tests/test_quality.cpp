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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qopt/optimizer.hpp"
#include "qopt/quality.hpp"
#include "qopt/usecases.hpp"
#include "qopt/variational.hpp"
#include "test_util.hpp"

namespace qopt {
namespace {

Distribution dist(std::size_t n, std::initializer_list<std::pair<const char*, double>> entries) {
  Distribution d;
  d.num_bits = n;
  for (const auto& [bits, p] : entries) d.probs[bits_from_string(bits)] = p;
  return d;
}

Distribution random_dist(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  Distribution d;
  d.num_bits = n;
  double total = 0;
  for (Bits b = 0; b < basis_size(n); ++b) {
    if (u(rng) < 0.3) continue;
    total += d.probs[b] = u(rng);
  }
  for (auto& [b, p] : d.probs) p /= total;
  return d;
}

TEST(Hellinger, Examples) {
  auto p = dist(2, {{"00", 0.25}, {"10", 0.75}});
  EXPECT_NEAR(hellinger_fidelity(p, p), 1.0, 1e-15);
  EXPECT_EQ(hellinger_fidelity(dist(2, {{"00", 1.0}}), dist(2, {{"11", 1.0}})), 0.0);
  EXPECT_NEAR(hellinger_fidelity(dist(2, {{"00", 1.0}}), dist(2, {{"00", 0.5}, {"01", 0.5}})), 0.5, 1e-15);
}

TEST(Hellinger, RejectsUnnormalized) {
  EXPECT_THROW(hellinger_fidelity(dist(1, {{"0", 0.7}}), dist(1, {{"0", 1.0}})), std::invalid_argument);
  EXPECT_THROW(hellinger_fidelity(dist(1, {{"0", 1.2}, {"1", -0.2}}), dist(1, {{"0", 1.0}})),
               std::invalid_argument);
}

TEST(Hellinger, SymmetricAndBounded) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_dist(4, rng);
    auto q = random_dist(4, rng);
    const double f = hellinger_fidelity(p, q);
    EXPECT_EQ(f, hellinger_fidelity(q, p));
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
  }
}

QuboProblem diag_qubo(std::vector<double> d) {
  QuboProblem q;
  q.Q = Matrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) q.Q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return q;
}

TEST(RelativeError, Examples) {
  // costs: 00 -> 2, 10 -> 4, 01 -> 6
  auto q = diag_qubo({2.0, 4.0});
  q.constant = 2.0;
  auto at_opt = relative_error(dist(2, {{"00", 1.0}}), q, 2.0);
  EXPECT_EQ(at_opt.value, 0.0);
  EXPECT_FALSE(at_opt.absolute_fallback);
  auto spread = relative_error(dist(2, {{"00", 0.5}, {"01", 0.5}}), q, 2.0);
  EXPECT_NEAR(spread.value, 1.0, 1e-15);
}

TEST(RelativeError, ZeroOptimumFallsBackToAbsolute) {
  auto q = diag_qubo({1.0});
  auto r = relative_error(dist(1, {{"0", 0.5}, {"1", 0.5}}), q, 0.0);
  EXPECT_TRUE(r.absolute_fallback);
  EXPECT_NEAR(r.value, 0.5, 1e-15);
  auto b = random_baseline(1, q, 3, 1);
  EXPECT_TRUE(b.absolute_fallback);
}

TEST(RelativeError, NegativeOptimumStaysNonnegative) {
  auto q = diag_qubo({-4.0, -2.0});
  auto r = relative_error(dist(2, {{"10", 0.5}, {"11", 0.5}}), q, -6.0);
  EXPECT_NEAR(r.value, (6.0 - 5.0) / 6.0, 1e-15);
}

TEST(RandomBaseline, DeterministicPerSeed) {
  auto q = lama_qubo(lama_example("Ex0p1"), 2.0);
  EXPECT_EQ(random_baseline(6, q, 1, 5).value, random_baseline(6, q, 1, 5).value);
  EXPECT_NE(random_baseline(6, q, 1, 5).value, random_baseline(6, q, 1, 6).value);
}

TEST(RandomBaseline, ApproachesUniformMean) {
  auto q = lama_qubo(lama_example("Ex0p2"), 2.0);
  const auto costs = qubo_cost_table(q);
  double mean = 0, best = INFINITY;
  for (double c : costs) {
    mean += c / static_cast<double>(costs.size());
    best = std::min(best, c);
  }
  const double uniform = std::abs(mean - best) / std::abs(best);
  EXPECT_NEAR(random_baseline(6, q, 200, 11).value, uniform, 0.05 * uniform);
}

TEST(RandomBaseline, WorseThanTrainedQaoa) {
  for (const char* name : {"Ex0p1", "Ex0p2", "Ex1p2"}) {
    const LamaSpec& spec = lama_example(name);
    auto qubo = lama_qubo(spec, 2.0);
    auto ising = to_ising(qubo);
    const auto diag = cost_diagonal(ising);
    const std::size_t n = spec.num_qubits();
    auto objective = [&](std::span<const double> x) {
      return expectation_diagonal(qaoa_state_fast(diag, n, QaoaParams::from_flat(x)), diag);
    };
    auto trained = multistart(objective, 10, uniform_box(4, 0, M_PI), 3);
    auto state = qaoa_state_fast(diag, n, QaoaParams::from_flat(trained.best_params));
    const double c_opt = brute_force_solve(qubo).optimal_cost;
    const double trained_err = relative_error(Distribution::from_state(state), qubo, c_opt).value;
    EXPECT_GT(random_baseline(n, qubo, 50, 7, c_opt).value, trained_err) << name;
    auto uniform = Distribution::from_state(StateVector::uniform(n));
    EXPECT_LT(trained_err, relative_error(uniform, qubo, c_opt).value) << name;
  }
}

TEST(SolutionRates, Examples) {
  SampleSet s;
  s.num_bits = 2;
  s.add(0, 40);
  s.add(1, 60);
  s.add(2, 300);
  auto decoder = [](Bits b) {
    return Decoded{b != 2, b == 0 ? 1.0 : 2.0};
  };
  auto r = solution_rates(s, decoder, 1.0);
  EXPECT_DOUBLE_EQ(r.feasible_pct, 25.0);
  EXPECT_DOUBLE_EQ(r.optimal_pct, 10.0);
  auto all = solution_rates(s, [](Bits) { return Decoded{true, 1.0}; }, 1.0);
  EXPECT_DOUBLE_EQ(all.feasible_pct, 100.0);
  EXPECT_DOUBLE_EQ(all.optimal_pct, 100.0);
  auto none = solution_rates(s, [](Bits) { return Decoded{false, 1.0}; }, 1.0);
  EXPECT_EQ(none.feasible_pct, 0.0);
  EXPECT_EQ(none.optimal_pct, 0.0);
  EXPECT_THROW(solution_rates(SampleSet{}, decoder, 1.0), std::invalid_argument);
}

TEST(SolutionRates, OptimalNeverExceedsFeasible) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    SampleSet s;
    s.num_bits = 4;
    for (Bits b = 0; b < 16; ++b) s.add(b, static_cast<std::uint64_t>(coin(rng)) + 1);
    std::vector<Decoded> table(16);
    for (auto& d : table) d = {coin(rng) > 1, static_cast<double>(coin(rng))};
    auto r = solution_rates(s, [&](Bits b) { return table[b]; }, 0.0);
    EXPECT_LE(r.optimal_pct, r.feasible_pct);
    EXPECT_LE(r.feasible_pct, 100.0);
  }
}

TEST(Distribution, FromSamplesAndState) {
  SampleSet s;
  s.num_bits = 2;
  s.add(1, 3);
  s.add(2, 1);
  auto d = Distribution::from_samples(s);
  EXPECT_DOUBLE_EQ(d.probs.at(1), 0.75);
  d.validate();
  auto st = Distribution::from_state(testing_util::random_state(5, 1), 1e-3);
  for (const auto& [b, p] : st.probs) EXPECT_GE(p, 1e-3);
}

}  // namespace
}  // namespace qopt
