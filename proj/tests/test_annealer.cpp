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

#include "qopt/annealer.hpp"
#include "qopt/quality.hpp"
#include "qopt/usecases.hpp"
#include "test_util.hpp"

namespace qopt {
namespace {

QuboProblem two_singletons() {
  QuboProblem q;
  q.Q.resize(2, 2);
  q.Q << -1, 2, 0, -1;
  return q;
}

// unique optimum 10 (qubit 1 set)
QuboProblem two_qubit_unique() {
  QuboProblem q;
  q.Q.resize(2, 2);
  q.Q << -2, 2, 0, -1;
  return q;
}

// unique optimum 101
QuboProblem three_qubit_chain() {
  QuboProblem q;
  q.Q.resize(3, 3);
  q.Q << -1, 2, 0, 0, -1, 2, 0, 0, -1;
  return q;
}

TEST(Schedule, LinearBoundaries) {
  auto s = AnnealSchedule::linear(7.0);
  EXPECT_EQ(s.a(0.0), 1.0);
  EXPECT_EQ(s.b(0.0), 0.0);
  EXPECT_EQ(s.a(7.0), 0.0);
  EXPECT_EQ(s.b(7.0), 1.0);
  for (double t = 0; t < 7; t += 0.5) {
    EXPECT_GE(s.a(t), s.a(t + 0.5));
    EXPECT_LE(s.b(t), s.b(t + 0.5));
  }
}

TEST(SaSample, ReadCountAndDeterminism) {
  auto q = testing_util::random_qubo(8, 3);
  SaConfig cfg{.num_reads = 123, .sweeps = 50, .seed = 9};
  auto a = sa_sample(q, cfg);
  auto b = sa_sample(q, cfg);
  EXPECT_EQ(a.shots, 123U);
  std::uint64_t total = 0;
  for (const auto& [bits, n] : a.counts) total += n;
  EXPECT_EQ(total, 123U);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.num_bits, 8U);
}

TEST(SaSample, TwoVariableSingletonsDominate) {
  auto s = sa_sample(two_singletons(), {.num_reads = 1000, .seed = 1});
  const auto hits = s.counts[bits_from_string("10")] + s.counts[bits_from_string("01")];
  EXPECT_GT(hits, 500U);
}

TEST(SaSample, FlatLandscapeUnbiased) {
  QuboProblem zero;
  zero.Q = Matrix::Zero(4, 4);
  auto s = sa_sample(zero, {.num_reads = 3200, .sweeps = 20, .t_hot = 1.0, .t_cold = 0.5, .seed = 2});
  // chi-square with 15 dof; 99.9% quantile is 37.7
  double chi2 = 0;
  const double expected = 3200.0 / 16;
  for (Bits b = 0; b < 16; ++b) {
    const double d = static_cast<double>(s.counts[b]) - expected;
    chi2 += d * d / expected;
  }
  EXPECT_LT(chi2, 37.7);
}

TEST(SaSample, InvalidTemperaturesRejected) {
  EXPECT_THROW(sa_sample(two_singletons(), {.t_hot = 0.1, .t_cold = 0.2}), std::invalid_argument);
}

TEST(QaTrotter, ZeroTimeKeepsUniform) {
  auto s = qa_trotter(to_ising(three_qubit_chain()), AnnealSchedule::linear(0.0), 0.01);
  for (double p : s.probabilities()) EXPECT_NEAR(p, 0.125, 1e-15);
}

TEST(QaTrotter, RejectsBadInput) {
  EXPECT_THROW(qa_trotter(to_ising(two_singletons()), AnnealSchedule::linear(1.0), 0.0), std::invalid_argument);
  EXPECT_THROW(qa_trotter(to_ising(testing_util::random_qubo(13, 1)), AnnealSchedule::linear(1.0), 0.1),
               std::length_error);
}

TEST(QaTrotter, NormPreserved) {
  auto s = qa_trotter(to_ising(testing_util::random_qubo(6, 4)), AnnealSchedule::linear(20.0), 0.05);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-6);
}

TEST(QaTrotter, AgreesWithExactIntegratorOnTwoQubits) {
  const auto q = two_qubit_unique();
  for (double T : {0.5, 5.0, 50.0}) {
    auto trotter = qa_trotter(to_ising(q), AnnealSchedule::linear(T), 0.01);
    const auto exact = testing_util::rk4_anneal(q, T, static_cast<std::size_t>(T / 0.002));
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(std::norm(trotter[k]), std::norm(exact[k]), 1e-3) << T;
  }
  auto slow = qa_trotter(to_ising(q), AnnealSchedule::linear(50.0), 0.01);
  EXPECT_GE(std::norm(slow[bits_from_string("10")]), 0.99);
}

TEST(QaTrotter, SuccessGrowsWithAnnealTime) {
  const auto ising = to_ising(three_qubit_chain());
  const Bits opt = bits_from_string("101");
  double prev = 0;
  for (double T : {0.5, 5.0, 50.0}) {
    const double p = std::norm(qa_trotter(ising, AnnealSchedule::linear(T), 0.01)[opt]);
    EXPECT_GE(p, prev) << T;
    prev = p;
  }
  EXPECT_GE(prev, 0.99);
}

TEST(Sweep, SingleValueOneRow) {
  auto family = lama_family(lama_example("Ex0p1"));
  const std::vector<double> values{2.0};
  auto rows = sweep(family, SweepAxis::Penalty, values, {.num_reads = 50, .sweeps = 100, .seed = 1});
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_GE(rows[0].feasible_pct, 0.0);
  EXPECT_LE(rows[0].feasible_pct, 100.0);
  EXPECT_LE(rows[0].optimal_pct, rows[0].feasible_pct);
  EXPECT_EQ(rows[0].reads, 50U);
}

TEST(Sweep, RowsOrderedAndOptimalNeverExceedsFeasible) {
  auto family = lama_family(lama_example("Ex1p2"));
  const std::vector<double> values{3.0, 0.5, 1.0, 0.0};
  auto rows = sweep(family, SweepAxis::Penalty, values, {.num_reads = 100, .sweeps = 200, .seed = 2});
  ASSERT_EQ(rows.size(), 4U);
  for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_LT(rows[k - 1].axis_value, rows[k].axis_value);
  for (const auto& r : rows) EXPECT_LE(r.optimal_pct, r.feasible_pct);
}

TEST(Sweep, AnnealTimeAxisUsesSweepCounts) {
  auto family = lama_family(lama_example("Ex0p2"));
  const std::vector<double> values{10, 1000};
  auto rows = sweep(family, SweepAxis::AnnealTime, values, {.num_reads = 200, .seed = 3}, 2.0);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_GT(rows[1].optimal_pct, 0.0);
  const std::vector<double> bad{0.5};
  EXPECT_THROW(sweep(family, SweepAxis::AnnealTime, bad, {}), std::invalid_argument);
}

TEST(Sweep, TrpPenaltyAxis) {
  auto spec = gen_cities(5, CityLayout::Asymmetric, 7);
  auto family = trp_family(spec);
  const std::vector<double> values{0.0, 0.1, 0.5, 1.0, 2.0};
  auto rows = sweep(family, SweepAxis::Penalty, values, {.num_reads = 300, .sweeps = 1000, .seed = 4});
  EXPECT_EQ(rows.front().feasible_pct, 0.0);
  EXPECT_GT(rows.back().feasible_pct, 0.0);
  for (const auto& r : rows) EXPECT_LE(r.optimal_pct, r.feasible_pct);
}

}  // namespace
}  // namespace qopt
