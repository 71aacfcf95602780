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
#include <numeric>
#include <random>

#include "qopt/usecases.hpp"
#include "qopt/variational.hpp"
#include "test_util.hpp"

namespace qopt {
namespace {

IsingModel lama_ising(const char* name, double rho = 2.0) { return to_ising(lama_qubo(lama_example(name), rho)); }

double mean_cost(const QuboProblem& q) {
  const auto t = qubo_cost_table(q);
  return std::accumulate(t.begin(), t.end(), 0.0) / static_cast<double>(t.size());
}

TEST(ParameterCounts, QaoaAndVqe) {
  for (std::size_t p : {1U, 2U, 3U}) EXPECT_EQ(qaoa_parameter_count(p), 2 * p);
  EXPECT_EQ(vqe_parameter_count(4, 2), 12U);
  EXPECT_EQ(vqe_parameter_count(8, 1), 16U);
  auto ising = lama_ising("Ex1p1");
  for (std::size_t p : {1U, 2U, 3U}) EXPECT_EQ(qaoa_circuit(ising, p).num_parameters(), 2 * p);
  EXPECT_EQ(vqe_circuit(4, 2).num_parameters(), 12U);
  EXPECT_EQ(vqe_circuit(8, 1).num_parameters(), 16U);
}

TEST(QaoaParams, FlatLayoutAndValidation) {
  QaoaParams p{{0.1, 0.2}, {0.3, 0.4}};
  EXPECT_EQ(p.flatten(), (std::vector<double>{0.1, 0.2, 0.3, 0.4}));
  auto back = QaoaParams::from_flat(p.flatten());
  EXPECT_EQ(back.betas, p.betas);
  EXPECT_EQ(back.gammas, p.gammas);
  QaoaParams bad{{0.1}, {0.2, 0.3}};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  VqeParams v{std::vector<double>(11), 2, 4};
  EXPECT_THROW(v.validate(), std::invalid_argument);
}

TEST(QaoaFast, ZeroAnglesGiveUniform) {
  auto s = qaoa_state_fast(lama_ising("Ex0p1"), {{0.0}, {0.0}});
  for (std::size_t i = 0; i < s.dimension(); ++i) EXPECT_NEAR(std::abs(s[i]), 0.125, 1e-14);
}

TEST(QaoaFast, MatchesGateCircuitUpToGlobalPhase) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ang(0, M_PI);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 9);
    const std::size_t p = 1 + static_cast<std::size_t>(trial % 3);
    auto ising = to_ising(testing_util::random_qubo(n, static_cast<std::uint64_t>(trial)));
    QaoaParams params;
    for (std::size_t k = 0; k < p; ++k) {
      params.betas.push_back(ang(rng));
      params.gammas.push_back(ang(rng));
    }
    auto fast = qaoa_state_fast(ising, params);
    auto flat = params.flatten();
    auto gate = run_circuit(qaoa_circuit(ising, p).bind(flat));
    EXPECT_LT(testing_util::phase_free_diff(gate.amplitudes(), fast.amplitudes()), 1e-10) << "n=" << n;
    EXPECT_NEAR(fast.norm_squared(), 1.0, 1e-9);
  }
}

TEST(QaoaFast, ExpectationAtZeroIsMeanCost) {
  for (const char* name : {"Ex0p2", "Ex1p3", "Ex2p4"}) {
    auto qubo = lama_qubo(lama_example(name), 1.5);
    auto ising = to_ising(qubo);
    auto s = qaoa_state_fast(ising, {{0.0}, {0.0}});
    EXPECT_NEAR(expectation_diagonal(s, cost_diagonal(ising)), mean_cost(qubo), 1e-9) << name;
  }
}

TEST(QaoaCircuit, OneRzzPerCouplingPerLayer) {
  QuboProblem q;
  q.Q = Matrix::Zero(2, 2);
  q.Q(0, 1) = 3.0;
  auto c = qaoa_circuit(to_ising(q), 2);
  std::size_t rzz = 0;
  for (const Gate& g : c.gates()) rzz += g.kind == GateKind::RZZ;
  EXPECT_EQ(rzz, 2U);

  auto qubo = lama_qubo(lama_example("Ex2p2"), 1.0);
  std::size_t nonzero = 0;
  for (Eigen::Index i = 0; i < qubo.Q.rows(); ++i)
    for (Eigen::Index j = i + 1; j < qubo.Q.cols(); ++j) nonzero += qubo.Q(i, j) != 0.0;
  auto c1 = qaoa_circuit(to_ising(qubo), 1);
  rzz = 0;
  for (const Gate& g : c1.gates()) rzz += g.kind == GateKind::RZZ;
  EXPECT_EQ(rzz, nonzero);
}

TEST(QaoaCircuit, RzzInLexicographicOrder) {
  auto c = qaoa_circuit(to_ising(testing_util::random_qubo(5, 2)), 1);
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (const Gate& g : c.gates())
    if (g.kind == GateKind::RZZ) seen.emplace_back(g.qubits[0], g.qubits[1]);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
}

TEST(QaoaCircuit, ZeroGammaIsPureMixer) {
  auto ising = lama_ising("Ex0p1");
  const std::vector<double> params{0.37, 0.0};
  auto s = run_circuit(qaoa_circuit(ising, 1).bind(params));
  Circuit mixer(6);
  for (std::size_t q = 0; q < 6; ++q) mixer.h(q);
  for (std::size_t q = 0; q < 6; ++q) mixer.rx(q, 2 * 0.37);
  auto m = run_circuit(mixer);
  EXPECT_LT(testing_util::phase_free_diff(s.amplitudes(), m.amplitudes()), 1e-12);
}

TEST(VqeCircuit, StructureAndZeroAngles) {
  auto c = vqe_circuit(4, 2);
  std::size_t ry = 0, cx = 0;
  for (const Gate& g : c.gates()) {
    ry += g.kind == GateKind::RY;
    cx += g.kind == GateKind::CX;
    if (g.kind == GateKind::CX) EXPECT_EQ(g.qubits[1], g.qubits[0] + 1);
  }
  EXPECT_EQ(ry, 12U);
  EXPECT_EQ(cx, 6U);
  auto s = run_circuit(c.bind(std::vector<double>(12, 0.0)));
  EXPECT_NEAR(std::abs(s[0]), 1.0, 1e-15);
  EXPECT_THROW(vqe_circuit(1, 1), std::invalid_argument);
  EXPECT_THROW(vqe_circuit(3, 0), std::invalid_argument);
}

TEST(VqeCircuit, FinalLayerUsesLastParameters) {
  // Only the last n parameters nonzero: state is a product of RY rotations.
  const std::size_t n = 3, L = 2;
  std::vector<double> theta(n * (L + 1), 0.0);
  theta[n * L + 0] = M_PI;  // qubit 1 flipped
  auto s = run_circuit(vqe_circuit(n, L).bind(theta));
  EXPECT_NEAR(std::abs(s[bits_from_string("100")]), 1.0, 1e-12);
}

TEST(VqeCircuit, NormalizedForRandomAngles) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 2 * M_PI);
  auto c = vqe_circuit(6, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> theta(c.num_parameters());
    for (auto& t : theta) t = u(rng);
    EXPECT_NEAR(run_circuit(c.bind(theta)).norm_squared(), 1.0, 1e-9);
  }
}

TEST(Landscape, ShapeAxesAndZeroGammaColumn) {
  auto qubo = lama_qubo(lama_example("Ex0p2"), 1.0);
  auto land = cost_landscape(to_ising(qubo), {.resolution = 12});
  ASSERT_EQ(land.grid.size(), 12U);
  for (const auto& row : land.grid) ASSERT_EQ(row.size(), 12U);
  EXPECT_EQ(land.evaluations, 144U);
  EXPECT_DOUBLE_EQ(land.beta_axis.front(), 0.0);
  EXPECT_DOUBLE_EQ(land.beta_axis.back(), M_PI);
  EXPECT_DOUBLE_EQ(land.gamma_axis.back(), M_PI);
  const double mean = mean_cost(qubo);
  for (std::size_t i = 0; i < 12; ++i) EXPECT_NEAR(land.grid[i][0], mean, 1e-9);
}

TEST(Landscape, DefaultResolutionIsFifty) {
  auto land = cost_landscape(lama_ising("Ex0p1"));
  EXPECT_EQ(land.evaluations, 2500U);
}

TEST(Landscape, ShotModeIsNoisyButClose) {
  auto ising = lama_ising("Ex0p1");
  auto exact = cost_landscape(ising, {.resolution = 5});
  auto noisy = cost_landscape(ising, {.resolution = 5, .shots = 20000, .seed = 4});
  auto again = cost_landscape(ising, {.resolution = 5, .shots = 20000, .seed = 4});
  EXPECT_EQ(noisy.grid, again.grid);
  double scale = 0;
  for (const auto& row : exact.grid)
    for (double v : row) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_NEAR(noisy.grid[i][j], exact.grid[i][j], 0.05 * scale);
}

}  // namespace
}  // namespace qopt
