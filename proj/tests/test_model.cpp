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

#include "qopt/model.hpp"
#include "test_util.hpp"

namespace qopt {
namespace {

QcioProblem scalar_problem(double m, double l, double a, double r, int upper = 3) {
  QcioProblem p;
  p.M = Matrix::Constant(1, 1, m);
  p.l = Vector::Constant(1, l);
  p.A = Matrix::Constant(1, 1, a);
  p.r = Vector::Constant(1, r);
  p.lower = {0};
  p.upper = {upper};
  return p;
}

TEST(BuildQuio, ZeroPenaltyIsIdentity) {
  auto p = testing_util::random_qcio(3, 7);
  auto q = build_quio(p, 0.0);
  EXPECT_TRUE(q.M_rho.isApprox(p.M));
  EXPECT_TRUE(q.l_rho.isApprox(p.l));
  EXPECT_DOUBLE_EQ(q.c_rho, p.c);
}

TEST(BuildQuio, IdentityConstraintAddsIdentity) {
  auto p = testing_util::random_qcio(3, 8);
  p.A = Matrix::Identity(3, 3);
  p.r = Vector::Zero(3);
  auto q = build_quio(p, 1.0);
  EXPECT_TRUE(q.M_rho.isApprox(p.M + Matrix::Identity(3, 3)));
  EXPECT_TRUE(q.l_rho.isApprox(p.l));
  EXPECT_DOUBLE_EQ(q.c_rho, p.c);
}

TEST(BuildQuio, HandExpansionOfSquaredResidual) {
  // (x - 2)^2 = x^2 - 4x + 4
  auto q = build_quio(scalar_problem(0, 0, 1, 2), 1.0);
  EXPECT_DOUBLE_EQ(q.M_rho(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(q.l_rho(0), -4.0);
  EXPECT_DOUBLE_EQ(q.c_rho, 4.0);
}

TEST(BuildQuio, RejectsNegativePenalty) {
  EXPECT_THROW(build_quio(scalar_problem(0, 0, 1, 2), -0.5), std::invalid_argument);
}

TEST(BuildQuio, PenalizedCostMatchesDirectFormula) {
  auto p = testing_util::random_qcio(4, 21);
  const double rho = 1.7;
  auto q = build_quio(p, rho);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> level(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Vector x(4);
    for (int i = 0; i < 4; ++i) x(i) = level(rng);
    const Vector res = p.A * x - p.r;
    EXPECT_NEAR(q.cost(x), p.cost(x) + rho * res.squaredNorm(), 1e-9);
  }
}

TEST(EncodeBinary, LevelEncodingOfSquare) {
  QuioProblem quio;
  quio.M_rho = Matrix::Constant(1, 1, 1.0);
  quio.l_rho = Vector::Zero(1);
  auto qubo = encode_binary(quio, BinaryEncoding::uniform(1, 2));
  Matrix expected(2, 2);
  expected << 1, 4, 0, 4;
  EXPECT_TRUE(qubo.Q.isApprox(expected));
  EXPECT_DOUBLE_EQ(qubo.constant, 0.0);
}

TEST(EncodeBinary, ZeroInputGivesZeroQubo) {
  QuioProblem quio;
  quio.M_rho = Matrix::Zero(2, 2);
  quio.l_rho = Vector::Zero(2);
  auto qubo = encode_binary(quio, BinaryEncoding::uniform(2, 2));
  EXPECT_TRUE(qubo.Q.isZero());
}

TEST(EncodeBinary, IdentityEncodingMergesLinearTerm) {
  QuioProblem quio;
  quio.M_rho = Vector(Vector::LinSpaced(3, 1.0, 3.0)).asDiagonal();
  quio.l_rho = Vector::LinSpaced(3, -1.0, 1.0);
  BinaryEncoding enc = BinaryEncoding::uniform(3, 1);
  EXPECT_TRUE(enc.B.isApprox(Matrix::Identity(3, 3)));
  auto qubo = encode_binary(quio, enc);
  Matrix expected = quio.M_rho;
  expected.diagonal() += quio.l_rho;
  EXPECT_TRUE(qubo.Q.isApprox(expected));
}

TEST(EncodeBinary, DimensionMismatchThrows) {
  QuioProblem quio;
  quio.M_rho = Matrix::Zero(2, 2);
  quio.l_rho = Vector::Zero(2);
  EXPECT_THROW(encode_binary(quio, BinaryEncoding::uniform(3, 2)), std::invalid_argument);
}

TEST(UpperTriangularize, FoldsLowerPart) {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  Matrix expected(2, 2);
  expected << 0, 2, 0, 0;
  EXPECT_TRUE(upper_triangularize(m).isApprox(expected));
}

TEST(UpperTriangularize, UpperAndDiagonalInputsUnchanged) {
  Matrix u(3, 3);
  u << 1, 2, 3, 0, 4, 5, 0, 0, 6;
  EXPECT_EQ(upper_triangularize(u), u);
  Matrix d = Vector::LinSpaced(4, 1, 4).asDiagonal();
  EXPECT_EQ(upper_triangularize(d), d);
}

TEST(UpperTriangularize, PreservesQuadraticForm) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  Matrix m(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = g(rng);
  const Matrix u = upper_triangularize(m);
  EXPECT_TRUE(u.triangularView<Eigen::StrictlyLower>().toDenseMatrix().isZero());
  for (int trial = 0; trial < 100; ++trial) {
    Vector x(6);
    for (int i = 0; i < 6; ++i) x(i) = g(rng);
    EXPECT_NEAR(x.dot(u * x), x.dot(m * x), 1e-9);
  }
}

TEST(QuboCost, Examples) {
  QuboProblem q;
  q.Q.resize(2, 2);
  q.Q << 1, 4, 0, 4;
  EXPECT_DOUBLE_EQ(qubo_cost(q, bits_from_string("11")), 9.0);
  EXPECT_DOUBLE_EQ(qubo_cost(q, bits_from_string("10")), 1.0);
  q.constant = 2.5;
  EXPECT_DOUBLE_EQ(qubo_cost(q, 0), 2.5);
}

TEST(QuboCost, LengthMismatchThrows) {
  QuboProblem q;
  q.Q = Matrix::Zero(2, 2);
  const std::vector<std::uint8_t> three{1, 0, 1};
  EXPECT_THROW(qubo_cost(q, three), std::invalid_argument);
  const std::vector<std::uint8_t> two{1, 1};
  EXPECT_DOUBLE_EQ(qubo_cost(q, two), 0.0);
}

TEST(QuboCost, TableMatchesDirectEvaluation) {
  auto qubo = testing_util::random_qubo(12, 5);
  const auto table = qubo_cost_table(qubo);
  ASSERT_EQ(table.size(), 4096U);
  for (Bits b = 0; b < table.size(); ++b) {
    EXPECT_NEAR(table[b], testing_util::naive_cost(qubo, b), 1e-9);
  }
}

TEST(ToIsing, SingleDiagonal) {
  QuboProblem q;
  q.Q = Matrix::Constant(1, 1, 1.0);
  auto ising = to_ising(q);
  EXPECT_DOUBLE_EQ(ising.h_lin[0], -0.5);
  EXPECT_DOUBLE_EQ(ising.h_const, 0.5);
  EXPECT_TRUE(ising.h_quad.empty());
}

TEST(ToIsing, SingleCoupling) {
  QuboProblem q;
  q.Q.resize(2, 2);
  q.Q << 0, 4, 0, 0;
  auto ising = to_ising(q);
  ASSERT_EQ(ising.h_quad.size(), 1U);
  EXPECT_DOUBLE_EQ(ising.h_quad.at({0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(ising.h_lin[0], -1.0);
  EXPECT_DOUBLE_EQ(ising.h_lin[1], -1.0);
  EXPECT_DOUBLE_EQ(ising.h_const, 1.0);
}

TEST(ToIsing, ZeroQubo) {
  QuboProblem q;
  q.Q = Matrix::Zero(3, 3);
  auto ising = to_ising(q);
  EXPECT_TRUE(ising.h_quad.empty());
  for (double h : ising.h_lin) EXPECT_EQ(h, 0.0);
  EXPECT_EQ(ising.h_const, 0.0);
}

TEST(ToIsing, DiagonalIdentityOnRandomQubos) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto qubo = testing_util::random_qubo(8, seed);
    auto ising = to_ising(qubo);
    for (Bits b = 0; b < basis_size(8); ++b) {
      ASSERT_NEAR(ising.diag_cost(b), testing_util::naive_cost(qubo, b), 1e-9);
    }
  }
}

TEST(BruteForce, TwoSingletons) {
  QuboProblem q;
  q.Q.resize(2, 2);
  q.Q << -1, 2, 0, -1;
  auto report = brute_force_solve(q);
  EXPECT_DOUBLE_EQ(report.optimal_cost, -1.0);
  ASSERT_EQ(report.optimal_set.size(), 2U);
  EXPECT_EQ(bits_to_string(report.optimal_set[0], 2), "10");
  EXPECT_EQ(bits_to_string(report.optimal_set[1], 2), "01");
  EXPECT_EQ(report.evaluations, 4U);
}

TEST(BruteForce, ZeroQuboAllOptimal) {
  QuboProblem q;
  q.Q = Matrix::Zero(4, 4);
  q.constant = 1.5;
  auto report = brute_force_solve(q);
  EXPECT_EQ(report.optimal_set.size(), 16U);
  EXPECT_DOUBLE_EQ(report.optimal_cost, 1.5);
}

TEST(BruteForce, CapExceeded) {
  QuboProblem q;
  q.Q = Matrix::Zero(10, 10);
  EXPECT_THROW(brute_force_solve(q, 8), std::length_error);
}

TEST(BruteForce, OptimalSetIsExactlyTheMinimizers) {
  auto qubo = testing_util::random_qubo(10, 99);
  // integer entries produce ties
  qubo.Q = qubo.Q.array().round();
  auto report = brute_force_solve(qubo);
  double best = INFINITY;
  for (Bits b = 0; b < basis_size(10); ++b) best = std::min(best, testing_util::naive_cost(qubo, b));
  EXPECT_DOUBLE_EQ(report.optimal_cost, best);
  std::vector<Bits> expected;
  for (Bits b = 0; b < basis_size(10); ++b)
    if (std::abs(testing_util::naive_cost(qubo, b) - best) <= 1e-9) expected.push_back(b);
  EXPECT_EQ(report.optimal_set, expected);
}

TEST(TransformChain, QuboCostEqualsPenalizedIntegerCost) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto p = testing_util::random_qcio(3, seed);
    auto enc = BinaryEncoding::uniform(3, 2);
    auto quio = build_quio(p, 2.3);
    auto qubo = encode_binary(quio, enc);
    for (Bits b = 0; b < basis_size(6); ++b) {
      ASSERT_NEAR(qubo_cost(qubo, b), quio.cost(enc.decode(b)), 1e-9);
    }
  }
}

TEST(MinPenalty, UnconstrainedIsZero) {
  auto p = testing_util::random_qcio(2, 4);
  p.A = Matrix::Zero(2, 2);
  p.r = Vector::Zero(2);
  EXPECT_DOUBLE_EQ(min_penalty(p, BinaryEncoding::uniform(2, 2)), 0.0);
}

TEST(MinPenalty, ScalarToyMatchesGridOracle) {
  // cost x, constraint x = 2 over x in 0..3
  auto p = scalar_problem(0, 1, 1, 2);
  auto enc = BinaryEncoding::uniform(1, 2);
  const double rho = min_penalty(p, enc);
  // Independent oracle: scan the grid and decode the argmin of
  // x + rho (x - 2)^2 over x in 0..3 directly.
  auto decoded_argmin = [](double r) {
    int best = -1;
    double best_cost = INFINITY;
    bool tie = false;
    for (int x = 0; x <= 3; ++x) {
      const double v = x + r * (x - 2) * (x - 2);
      if (v < best_cost - 1e-12) {
        best_cost = v;
        best = x;
        tie = false;
      } else if (std::abs(v - best_cost) <= 1e-12) {
        tie = true;
      }
    }
    return tie ? -1 : best;
  };
  double expected = -1;
  for (int k = 0; k < 1000; ++k) {
    if (decoded_argmin(0.1 * k) == 2) {
      expected = 0.1 * k;
      break;
    }
  }
  EXPECT_NEAR(rho, expected, 1e-9);
  EXPECT_NEAR(rho, 1.1, 1e-9);
  for (int k = 0; k < 10; ++k) EXPECT_TRUE(penalty_is_exact(p, enc, rho + 0.1 * k));
}

TEST(MinPenalty, InvalidStepThrows) {
  auto p = scalar_problem(0, 1, 1, 2);
  EXPECT_THROW(min_penalty(p, BinaryEncoding::uniform(1, 2), {.step = 0.0}), std::invalid_argument);
}

TEST(MinPenalty, InfeasibleThrows) {
  auto p = scalar_problem(0, 1, 1, 7);
  EXPECT_THROW(min_penalty(p, BinaryEncoding::uniform(1, 2)), std::runtime_error);
}

TEST(MinPenalty, DecodedMinimizersSatisfyConstraints) {
  QcioProblem p;
  p.M = Matrix::Identity(2, 2);
  p.l = Vector::Zero(2);
  p.A = Matrix::Zero(2, 2);
  p.A.row(0) << 1, 1;
  p.r = Vector::Zero(2);
  p.r(0) = 3;
  p.lower = {0, 0};
  p.upper = {3, 3};
  auto enc = BinaryEncoding::uniform(2, 2);
  const double rho = min_penalty(p, enc);
  auto report = brute_force_solve(encode_binary(build_quio(p, rho), enc));
  for (Bits b : report.optimal_set) EXPECT_TRUE(p.satisfies_constraints(enc.decode(b), 0.0));
}

TEST(Bits, StringRoundTripQubitOneFirst) {
  EXPECT_EQ(bits_to_string(1, 3), "100");
  EXPECT_EQ(bits_from_string("001"), 4U);
  EXPECT_THROW(bits_from_string("01x"), std::invalid_argument);
}

}  // namespace
}  // namespace qopt
