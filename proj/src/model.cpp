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

#include "qopt/model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qopt {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + " must be square");
  }
}

// Change of b^T Q b when bit k is switched on, given the other bits in b.
double flip_on_delta(const Matrix& Q, Bits b, std::size_t k) {
  const auto n = static_cast<std::size_t>(Q.rows());
  double delta = Q(k, k);
  for (std::size_t j = 0; j < n; ++j) {
    if (j != k && test_bit(b, j)) delta += Q(k, j) + Q(j, k);
  }
  return delta;
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n >= kMaxBits) {
    throw std::length_error("brute force over " + std::to_string(n) +
                            " variables exceeds cap of " + std::to_string(cap));
  }
}

// Walks all 2^n bitstrings in Gray-code order, calling visit(bits, cost).
// Costs are resynchronized with an exact evaluation every 4096 steps.
template <typename Visit>
void gray_walk(const QuboProblem& qubo, Visit&& visit) {
  const std::size_t n = qubo.num_vars();
  const std::uint64_t total = basis_size(n);
  Bits b = 0;
  double cost = qubo.constant;
  visit(b, cost);
  for (std::uint64_t g = 1; g < total; ++g) {
    const auto k = static_cast<std::size_t>(std::countr_zero(g));
    const double delta = flip_on_delta(qubo.Q, b, k);
    cost += test_bit(b, k) ? -delta : delta;
    b = flip_bit(b, k);
    if ((g & 0xFFFU) == 0) cost = qubo.cost(b);
    visit(b, cost);
  }
}

}  // namespace

void QcioProblem::validate() const {
  require_square(M, "M");
  require_square(A, "A");
  const auto n = M.rows();
  if (l.size() != n || A.rows() != n || r.size() != n) {
    throw std::invalid_argument("QCIO dimensions disagree");
  }
  if (lower.size() != static_cast<std::size_t>(n) || upper.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("QCIO bounds must have one entry per variable");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (lower[i] > upper[i]) throw std::invalid_argument("QCIO lower bound exceeds upper bound");
  }
}

double QcioProblem::cost(const Vector& x) const { return x.dot(M * x) + l.dot(x) + c; }

bool QcioProblem::satisfies_constraints(const Vector& x, double tol) const {
  return ((A * x) - r).cwiseAbs().maxCoeff() <= tol;
}

bool QcioProblem::within_bounds(const Vector& x) const {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] < lower[i] || x[i] > upper[i]) return false;
  }
  return true;
}

double QuioProblem::cost(const Vector& x) const { return x.dot(M_rho * x) + l_rho.dot(x) + c_rho; }

BinaryEncoding BinaryEncoding::positional(std::span<const int> bits_per_var) {
  int total = 0;
  for (int k : bits_per_var) {
    if (k < 1) throw std::invalid_argument("each variable needs at least one bit");
    total += k;
  }
  BinaryEncoding enc;
  enc.bits_per_var.assign(bits_per_var.begin(), bits_per_var.end());
  enc.B = Matrix::Zero(static_cast<Eigen::Index>(bits_per_var.size()), total);
  int offset = 0;
  for (std::size_t v = 0; v < bits_per_var.size(); ++v) {
    for (int k = 0; k < bits_per_var[v]; ++k) {
      enc.B(static_cast<Eigen::Index>(v), offset + k) = std::ldexp(1.0, k);
    }
    offset += bits_per_var[v];
  }
  return enc;
}

BinaryEncoding BinaryEncoding::uniform(std::size_t num_vars, int bits) {
  const std::vector<int> per(num_vars, bits);
  return positional(per);
}

Vector BinaryEncoding::decode(Bits b) const {
  Vector bits(B.cols());
  for (Eigen::Index i = 0; i < B.cols(); ++i) bits[i] = test_bit(b, static_cast<std::size_t>(i)) ? 1.0 : 0.0;
  return B * bits;
}

double QuboProblem::cost(Bits b) const { return qubo_cost(*this, b); }

double IsingModel::diag_cost(Bits b) const {
  auto z = [b](std::size_t i) { return test_bit(b, i) ? -1.0 : 1.0; };
  double e = h_const;
  for (std::size_t i = 0; i < h_lin.size(); ++i) e += h_lin[i] * z(i);
  for (const auto& [ij, h] : h_quad) e += h * z(ij.first) * z(ij.second);
  return e;
}

QuioProblem build_quio(const QcioProblem& qcio, double rho) {
  if (!(rho >= 0.0)) throw std::invalid_argument("penalty rho must be nonnegative");
  qcio.validate();
  QuioProblem out;
  out.rho = rho;
  out.M_rho = qcio.M + rho * qcio.A.transpose() * qcio.A;
  out.l_rho = qcio.l - 2.0 * rho * (qcio.A.transpose() * qcio.r);
  out.c_rho = qcio.c + rho * qcio.r.squaredNorm();
  return out;
}

QuboProblem encode_binary(const QuioProblem& quio, const BinaryEncoding& enc) {
  if (enc.B.rows() != quio.M_rho.rows() || quio.M_rho.rows() != quio.M_rho.cols() ||
      quio.l_rho.size() != quio.M_rho.rows()) {
    throw std::invalid_argument("encoding rows must match the number of integer variables");
  }
  if (enc.num_bits() >= kMaxBits) throw std::invalid_argument("encodings are limited to 63 bits");
  Matrix full = enc.B.transpose() * quio.M_rho * enc.B;
  full.diagonal() += enc.B.transpose() * quio.l_rho;
  return QuboProblem{upper_triangularize(full), quio.c_rho};
}

Matrix upper_triangularize(const Matrix& mat) {
  require_square(mat, "matrix");
  Matrix out = Matrix::Zero(mat.rows(), mat.cols());
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    out(i, i) = mat(i, i);
    for (Eigen::Index j = i + 1; j < mat.cols(); ++j) out(i, j) = mat(i, j) + mat(j, i);
  }
  return out;
}

double qubo_cost(const QuboProblem& qubo, Bits b) {
  const std::size_t n = qubo.num_vars();
  double e = qubo.constant;
  for (std::size_t i = 0; i < n; ++i) {
    if (!test_bit(b, i)) continue;
    for (std::size_t j = i; j < n; ++j) {
      if (test_bit(b, j)) e += qubo.Q(i, j);
    }
  }
  return e;
}

double qubo_cost(const QuboProblem& qubo, std::span<const std::uint8_t> bits) {
  if (bits.size() != qubo.num_vars()) {
    throw std::invalid_argument("bitstring length " + std::to_string(bits.size()) +
                                " does not match " + std::to_string(qubo.num_vars()) + " variables");
  }
  Bits b = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw std::invalid_argument("bit values must be 0 or 1");
    if (bits[i] != 0) b |= Bits{1} << i;
  }
  return qubo_cost(qubo, b);
}

std::vector<double> qubo_cost_table(const QuboProblem& qubo, std::size_t cap) {
  check_cap(qubo.num_vars(), cap);
  std::vector<double> table(basis_size(qubo.num_vars()));
  gray_walk(qubo, [&](Bits b, double cost) { table[b] = cost; });
  return table;
}

IsingModel to_ising(const QuboProblem& qubo) {
  const std::size_t n = qubo.num_vars();
  IsingModel ising;
  ising.num_qubits = n;
  ising.h_lin.assign(n, 0.0);
  ising.h_const = qubo.constant;
  // b_i -> (1 - Z_i) / 2
  for (std::size_t i = 0; i < n; ++i) {
    const double d = qubo.Q(i, i);
    ising.h_const += d / 2.0;
    ising.h_lin[i] -= d / 2.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double q = qubo.Q(i, j) + qubo.Q(j, i);
      if (q == 0.0) continue;
      ising.h_const += q / 4.0;
      ising.h_lin[i] -= q / 4.0;
      ising.h_lin[j] -= q / 4.0;
      ising.h_quad[{i, j}] += q / 4.0;
    }
  }
  return ising;
}

SolveReport brute_force_solve(const QuboProblem& qubo, std::size_t cap) {
  check_cap(qubo.num_vars(), cap);
  SolveReport report;
  double best = std::numeric_limits<double>::infinity();
  std::vector<Bits> candidates;
  auto tol = [](double ref) { return kOptimalityTol * std::max(1.0, std::abs(ref)); };
  gray_walk(qubo, [&](Bits b, double cost) {
    ++report.evaluations;
    if (cost < best - tol(best)) {
      best = cost;
      candidates.clear();
      candidates.push_back(b);
    } else if (cost <= best + tol(best)) {
      candidates.push_back(b);
    }
  });
  // Exact re-evaluation removes drift from the incremental walk.
  double exact_best = std::numeric_limits<double>::infinity();
  for (Bits b : candidates) exact_best = std::min(exact_best, qubo.cost(b));
  for (Bits b : candidates) {
    if (qubo.cost(b) <= exact_best + tol(exact_best)) report.optimal_set.push_back(b);
  }
  std::sort(report.optimal_set.begin(), report.optimal_set.end());
  report.optimal_cost = exact_best;
  return report;
}

namespace {

struct ConstrainedOptimum {
  double cost;
  std::size_t feasible_count;
};

ConstrainedOptimum constrained_optimum(const QcioProblem& qcio, const BinaryEncoding& enc, std::size_t cap) {
  check_cap(enc.num_bits(), cap);
  ConstrainedOptimum out{std::numeric_limits<double>::infinity(), 0};
  for (Bits b = 0; b < basis_size(enc.num_bits()); ++b) {
    const Vector x = enc.decode(b);
    if (!qcio.within_bounds(x) || !qcio.satisfies_constraints(x)) continue;
    ++out.feasible_count;
    out.cost = std::min(out.cost, qcio.cost(x));
  }
  return out;
}

bool minimizers_are_exact(const QcioProblem& qcio, const BinaryEncoding& enc, double rho,
                          double target, std::size_t cap) {
  const SolveReport rep = brute_force_solve(encode_binary(build_quio(qcio, rho), enc), cap);
  const double tol = kOptimalityTol * std::max(1.0, std::abs(target));
  return std::all_of(rep.optimal_set.begin(), rep.optimal_set.end(), [&](Bits b) {
    const Vector x = enc.decode(b);
    return qcio.within_bounds(x) && qcio.satisfies_constraints(x) && std::abs(qcio.cost(x) - target) <= tol;
  });
}

}  // namespace

bool penalty_is_exact(const QcioProblem& qcio, const BinaryEncoding& enc, double rho, std::size_t cap) {
  qcio.validate();
  const ConstrainedOptimum opt = constrained_optimum(qcio, enc, cap);
  if (opt.feasible_count == 0) return false;
  return minimizers_are_exact(qcio, enc, rho, opt.cost, cap);
}

double min_penalty(const QcioProblem& qcio, const BinaryEncoding& enc, const PenaltyScanOptions& options) {
  if (!(options.step > 0.0)) throw std::invalid_argument("penalty step must be positive");
  qcio.validate();
  const ConstrainedOptimum opt = constrained_optimum(qcio, enc, options.cap);
  if (opt.feasible_count == 0) throw std::runtime_error("constrained problem has no feasible point");
  for (std::size_t k = 0;; ++k) {
    const double rho = static_cast<double>(k) * options.step;
    if (rho > options.ceiling + 1e-12) break;
    if (minimizers_are_exact(qcio, enc, rho, opt.cost, options.cap)) return rho;
  }
  throw std::runtime_error("no exact penalty found up to ceiling " + std::to_string(options.ceiling));
}

}  // namespace qopt
