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
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qopt/bits.hpp"

namespace qopt {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Quadratic constrained integer problem: minimize x^T M x + l x + c subject
/// to A x = r with lower <= x <= upper.
struct QcioProblem {
  Matrix M;
  Vector l;  // row vector, stored as a column
  double c = 0.0;
  Matrix A;
  Vector r;
  std::vector<int> lower;
  std::vector<int> upper;

  std::size_t dim() const { return static_cast<std::size_t>(M.rows()); }

  /// Throws std::invalid_argument if shapes or bounds are inconsistent.
  void validate() const;

  double cost(const Vector& x) const;
  bool satisfies_constraints(const Vector& x, double tol = 1e-9) const;
  bool within_bounds(const Vector& x) const;
};

/// Penalized unconstrained integer problem.
struct QuioProblem {
  Matrix M_rho;
  Vector l_rho;
  double c_rho = 0.0;
  double rho = 0.0;

  std::size_t dim() const { return static_cast<std::size_t>(M_rho.rows()); }
  double cost(const Vector& x) const;
};

/// Positional binary encoding x = B b. Each integer variable owns a
/// contiguous block of bits, least significant bit first.
struct BinaryEncoding {
  Matrix B;
  std::vector<int> bits_per_var;

  static BinaryEncoding positional(std::span<const int> bits_per_var);
  static BinaryEncoding uniform(std::size_t num_vars, int bits);

  std::size_t num_vars() const { return static_cast<std::size_t>(B.rows()); }
  std::size_t num_bits() const { return static_cast<std::size_t>(B.cols()); }
  Vector decode(Bits b) const;
};

/// Binary problem b^T Q b + constant with Q upper-triangular.
struct QuboProblem {
  Matrix Q;
  double constant = 0.0;

  std::size_t num_vars() const { return static_cast<std::size_t>(Q.rows()); }
  double cost(Bits b) const;
};

/// Diagonal cost Hamiltonian sum_{i<j} h_ij Z_i Z_j + sum_i h'_i Z_i + h''.
struct IsingModel {
  std::map<std::pair<std::size_t, std::size_t>, double> h_quad;
  std::vector<double> h_lin;
  double h_const = 0.0;
  std::size_t num_qubits = 0;

  /// <b|H|b>, using Z|b_i> = (-1)^{b_i} |b_i>.
  double diag_cost(Bits b) const;
};

struct SolveReport {
  double optimal_cost = 0.0;
  std::vector<Bits> optimal_set;  // ascending
  std::uint64_t evaluations = 0;
};

inline constexpr std::size_t kDefaultBruteForceCap = 26;
inline constexpr double kOptimalityTol = 1e-9;

QuioProblem build_quio(const QcioProblem& qcio, double rho);

QuboProblem encode_binary(const QuioProblem& quio, const BinaryEncoding& enc);

/// Folds the lower triangle onto the upper one; the quadratic form is unchanged.
Matrix upper_triangularize(const Matrix& mat);

double qubo_cost(const QuboProblem& qubo, Bits b);

/// Checked variant taking one byte (0 or 1) per variable.
double qubo_cost(const QuboProblem& qubo, std::span<const std::uint8_t> bits);

/// All 2^N costs indexed by bitstring, computed in Gray-code order.
std::vector<double> qubo_cost_table(const QuboProblem& qubo, std::size_t cap = kDefaultBruteForceCap);

IsingModel to_ising(const QuboProblem& qubo);

/// Exhaustive minimization; throws std::length_error when N exceeds cap.
SolveReport brute_force_solve(const QuboProblem& qubo, std::size_t cap = kDefaultBruteForceCap);

struct PenaltyScanOptions {
  double step = 0.1;
  double ceiling = 100.0;
  std::size_t cap = kDefaultBruteForceCap;
};

/// Smallest rho = k * step for which every QUBO minimizer decodes to a
/// feasible integer vector that also minimizes the constrained problem.
/// Throws std::runtime_error when no grid value up to the ceiling works.
double min_penalty(const QcioProblem& qcio, const BinaryEncoding& enc,
                   const PenaltyScanOptions& options = {});

/// True when every QUBO minimizer at this rho decodes to a constrained optimum.
bool penalty_is_exact(const QcioProblem& qcio, const BinaryEncoding& enc, double rho,
                      std::size_t cap = kDefaultBruteForceCap);

}  // namespace qopt
