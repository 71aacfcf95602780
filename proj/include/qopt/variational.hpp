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
#include <span>
#include <vector>

#include "qopt/circuit.hpp"
#include "qopt/model.hpp"
#include "qopt/simulator.hpp"

namespace qopt {

/// QAOA angles for p layers. The flat layout is (beta_1..beta_p, gamma_1..gamma_p).
struct QaoaParams {
  std::vector<double> betas;
  std::vector<double> gammas;

  std::size_t layers() const { return betas.size(); }
  std::size_t size() const { return 2 * betas.size(); }
  void validate() const;

  std::vector<double> flatten() const;
  static QaoaParams from_flat(std::span<const double> flat);
};

/// Two-local ansatz angles: theta[q + l * n] rotates qubit q in rotation layer l,
/// for l = 0..L (the last layer follows the final entangling block).
struct VqeParams {
  std::vector<double> thetas;
  std::size_t layers = 1;
  std::size_t qubits = 2;

  void validate() const;
};

constexpr std::size_t qaoa_parameter_count(std::size_t layers) { return 2 * layers; }
constexpr std::size_t vqe_parameter_count(std::size_t qubits, std::size_t layers) {
  return qubits * (layers + 1);
}

/// Diagonal of H_C over all basis states (N <= kMaxStateQubits).
std::vector<double> cost_diagonal(const IsingModel& ising);

/// QAOA state from the diagonal phase form: each layer multiplies amplitude b
/// by exp(-i gamma cost(b)) and then applies RX(2 beta) to every qubit.
StateVector qaoa_state_fast(std::span<const double> diag, std::size_t num_qubits, const QaoaParams& params);
StateVector qaoa_state_fast(const IsingModel& ising, const QaoaParams& params);

/// Parametric gate-level QAOA circuit (H layer, then per layer RZ/RZZ phase
/// gates and an RX mixer). The global phase from h'' is omitted.
Circuit qaoa_circuit(const IsingModel& ising, std::size_t layers);

/// Two-local RY/CX-chain ansatz with n(L+1) parameters, starting from |0...0>.
Circuit vqe_circuit(std::size_t num_qubits, std::size_t layers);
StateVector vqe_state(std::size_t num_qubits, std::size_t layers, std::span<const double> thetas);

/// Energy of a flat parameter vector. With shots > 0 each call samples the
/// state with a fresh seed drawn in call order from `seed`.
using EnergyFn = std::function<double(std::span<const double>)>;
struct EnergyOptions {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};
EnergyFn qaoa_energy(std::vector<double> diag, std::size_t num_qubits, const EnergyOptions& options = {});
EnergyFn vqe_energy(std::vector<double> diag, std::size_t num_qubits, std::size_t layers,
                    const EnergyOptions& options = {});

struct Landscape {
  std::vector<double> beta_axis;
  std::vector<double> gamma_axis;
  /// grid[i][j] = E(beta_i, gamma_j)
  std::vector<std::vector<double>> grid;
  std::size_t evaluations = 0;
};

struct LandscapeOptions {
  std::size_t resolution = 50;
  /// 0 selects the exact expectation; otherwise the mean over this many shots.
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

/// p = 1 expectation of H_C on an evenly spaced grid over [0, pi]^2.
Landscape cost_landscape(const IsingModel& ising, const LandscapeOptions& options = {});

/// Evenly spaced points including both ends.
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace qopt
