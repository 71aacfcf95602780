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
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qopt/circuit.hpp"

namespace qopt {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected hardware connectivity graph.
class CouplingMap {
 public:
  CouplingMap() = default;
  CouplingMap(std::size_t num_qubits, std::vector<Edge> edges);

  static CouplingMap line(std::size_t n);
  static CouplingMap ring(std::size_t n);
  static CouplingMap full(std::size_t n);
  /// 27-qubit heavy-hex lattice (Falcon layout).
  static CouplingMap heavy_hex_27();
  /// "line:N", "ring:N", "full:N" or "heavy-hex-27".
  static CouplingMap preset(std::string_view name);

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t q) const { return adj_.at(q); }
  bool connected(std::size_t a, std::size_t b) const;
  /// BFS hop counts from `source`; unreachable qubits get SIZE_MAX.
  std::vector<std::size_t> distances_from(std::size_t source) const;

 private:
  std::size_t num_qubits_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
};

/// Injective logical -> physical assignment.
struct Layout {
  std::vector<std::size_t> logical_to_physical;

  static Layout trivial(std::size_t n);
  void validate(std::size_t num_physical) const;
  bool operator==(const Layout&) const = default;
};

struct RoutedCircuit {
  Circuit circuit;  // over physical qubits
  Layout initial_layout;
  Layout final_layout;
  std::size_t swaps_inserted = 0;
};

/// Greedy routing: for each two-qubit gate on uncoupled qubits, the first
/// operand is swapped along a shortest path (ties broken by `seed`) until it
/// neighbours the second. Throws std::runtime_error when no path exists.
RoutedCircuit route(const Circuit& circuit, const CouplingMap& coupling, const Layout& layout, std::uint64_t seed);

/// ECR is counted and scored like CX; it decomposes to CX gates.
enum class TwoQubitBasis { CX, CZ, ECR };

TwoQubitBasis basis_from_name(std::string_view name);

/// Rewrites into {RZ, SX, X, CX|CZ, MEASURE}: RZZ -> CX RZ CX,
/// SWAP -> 3 CX, other single-qubit gates -> RZ SX RZ SX RZ.
Circuit decompose(const Circuit& circuit, TwoQubitBasis basis = TwoQubitBasis::CX);

/// Number of CX/CZ gates. Throws std::invalid_argument on RZZ or SWAP.
std::size_t count_two_qubit(const Circuit& circuit);

/// Per-instruction error probabilities.
struct ErrorMap {
  std::vector<double> single_qubit;
  std::map<Edge, double> two_qubit;  // keys with first < second
  std::vector<double> measurement;

  static ErrorMap uniform(const CouplingMap& coupling, double e1, double e2, double emeas);
  void validate() const;
  /// RZ is virtual and always 0. Throws std::out_of_range for a missing entry.
  double error(const Gate& gate) const;
};

/// Product of (1 - error) over all instructions.
double circuit_score(const Circuit& circuit, const ErrorMap& errors);

inline constexpr std::size_t kMaxUnitaryQubits = 6;

/// Dense 2^n x 2^n unitary built from per-gate Kronecker embeddings.
/// MEASURE is skipped.
Eigen::MatrixXcd unitary_of(const Circuit& circuit);

/// Permutation sending logical basis states to physical ones (sizes equal).
Eigen::MatrixXcd layout_permutation(const Layout& layout);

/// Max-norm distance after removing the best global phase.
double phase_insensitive_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace qopt
