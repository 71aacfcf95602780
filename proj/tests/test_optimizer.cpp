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

#include "qopt/optimizer.hpp"
#include "qopt/usecases.hpp"
#include "qopt/variational.hpp"

namespace qopt {
namespace {

double quadratic(std::span<const double> x) { return (x[0] - 1.0) * (x[0] - 1.0); }

void expect_trace_invariants(const OptTrace& t) {
  ASSERT_FALSE(t.iterates.empty());
  EXPECT_EQ(t.final_cost, t.iterates.back().cost);
  EXPECT_EQ(t.final_params, t.iterates.back().params);
  const auto best = t.best_so_far();
  for (std::size_t k = 1; k < best.size(); ++k) EXPECT_LE(best[k], best[k - 1]);
  EXPECT_EQ(t.final_cost, best.back());
}

TEST(Minimize, ConvexOneDimensional) {
  auto t = minimize(quadratic, {0.0});
  EXPECT_NEAR(t.final_params[0], 1.0, 1e-3);
  EXPECT_EQ(t.termination, Termination::Tolerance);
  expect_trace_invariants(t);
}

TEST(Minimize, BudgetRespected) {
  std::size_t calls = 0;
  auto counted = [&](std::span<const double> x) {
    ++calls;
    return x[0] * x[0] + 3 * x[1] * x[1] + std::sin(x[2]);
  };
  auto t = minimize(counted, {1.0, 2.0, 0.5}, {.max_iter = 5});
  EXPECT_LE(calls, 5U);
  EXPECT_EQ(t.iterates.size(), calls);
  EXPECT_EQ(t.termination, Termination::MaxIter);
  expect_trace_invariants(t);
}

TEST(Minimize, ConstantObjectiveStopsByTolerance) {
  auto t = minimize([](std::span<const double>) { return 4.25; }, {0.3, -0.2});
  EXPECT_EQ(t.termination, Termination::Tolerance);
  EXPECT_EQ(t.final_cost, 4.25);
  EXPECT_LT(t.iterates.size(), 1000U);
}

TEST(Minimize, RosenbrockImproves) {
  auto rosen = [](std::span<const double> x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  };
  auto t = minimize(rosen, {-1.2, 1.0}, {.max_iter = 2000, .tol = 1e-9});
  EXPECT_NEAR(t.final_params[0], 1.0, 1e-3);
  EXPECT_NEAR(t.final_params[1], 1.0, 2e-3);
  expect_trace_invariants(t);
}

TEST(Minimize, NonFiniteAborts) {
  auto bad = [](std::span<const double> x) { return x[0] > 0.5 ? NAN : x[0]; };
  EXPECT_THROW(minimize(bad, {0.0}), std::runtime_error);
}

TEST(Multistart, SingleStartEqualsMinimize) {
  auto sampler = uniform_box(1, -2, 2);
  auto report = multistart(quadratic, 1, sampler, 5);
  auto rng = stream_rng(5, 0);
  auto x0 = sampler(rng);
  auto single = minimize(quadratic, x0);
  ASSERT_EQ(report.traces.size(), 1U);
  EXPECT_EQ(report.best_params, single.final_params);
  EXPECT_EQ(report.best_cost, single.final_cost);
}

TEST(Multistart, DeterministicAndBestIsMinimum) {
  auto f = [](std::span<const double> x) { return std::sin(3 * x[0]) + 0.1 * x[0] * x[0] + std::cos(2 * x[1]); };
  auto a = multistart(f, 10, uniform_box(2, -3, 3), 42);
  auto b = multistart(f, 10, uniform_box(2, -3, 3), 42);
  EXPECT_EQ(a.best_params, b.best_params);
  EXPECT_EQ(a.best_cost, b.best_cost);
  for (const auto& t : a.traces) {
    EXPECT_LE(a.best_cost, t.final_cost);
    expect_trace_invariants(t);
  }
  EXPECT_EQ(a.best_cost, a.traces[a.best_index].final_cost);
  EXPECT_THROW(multistart(f, 0, uniform_box(2, -3, 3), 1), std::invalid_argument);
}

TEST(Multistart, QaoaWithinFivePercentOfLandscapeMinimum) {
  auto ising = to_ising(lama_qubo(lama_example("Ex0p2"), 2.0));
  const auto diag = cost_diagonal(ising);
  auto land = cost_landscape(ising);
  double grid_min = INFINITY;
  for (const auto& row : land.grid)
    for (double v : row) grid_min = std::min(grid_min, v);
  auto objective = [&](std::span<const double> x) {
    return expectation_diagonal(qaoa_state_fast(diag, 6, QaoaParams::from_flat(x)), diag);
  };
  auto report = multistart(objective, 50, uniform_box(2, 0, M_PI), 2024);
  EXPECT_LE(report.best_cost, grid_min + 0.05 * std::abs(grid_min));
}

}  // namespace
}  // namespace qopt
