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

#include "qopt/variational.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qopt {

void QaoaParams::validate() const {
  if (betas.size() != gammas.size()) throw std::invalid_argument("QAOA needs one beta and one gamma per layer");
  if (betas.empty()) throw std::invalid_argument("QAOA needs at least one layer");
}

std::vector<double> QaoaParams::flatten() const {
  std::vector<double> flat(betas);
  flat.insert(flat.end(), gammas.begin(), gammas.end());
  return flat;
}

QaoaParams QaoaParams::from_flat(std::span<const double> flat) {
  if (flat.empty() || flat.size() % 2 != 0) throw std::invalid_argument("QAOA parameter vector must have even length");
  const std::size_t p = flat.size() / 2;
  return QaoaParams{{flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(p)},
                    {flat.begin() + static_cast<std::ptrdiff_t>(p), flat.end()}};
}

void VqeParams::validate() const {
  if (thetas.size() != vqe_parameter_count(qubits, layers)) {
    throw std::invalid_argument("VQE expects " + std::to_string(vqe_parameter_count(qubits, layers)) +
                                " parameters, got " + std::to_string(thetas.size()));
  }
}

std::vector<double> cost_diagonal(const IsingModel& ising) {
  if (ising.num_qubits > kMaxStateQubits) throw std::length_error("too many qubits for a dense diagonal");
  std::vector<double> diag(basis_size(ising.num_qubits));
  for (Bits b = 0; b < diag.size(); ++b) diag[b] = ising.diag_cost(b);
  return diag;
}

StateVector qaoa_state_fast(std::span<const double> diag, std::size_t num_qubits, const QaoaParams& params) {
  params.validate();
  StateVector state = StateVector::uniform(num_qubits);
  for (std::size_t layer = 0; layer < params.layers(); ++layer) {
    apply_diagonal_phase(state, diag, params.gammas[layer]);
    const Gate mixer{GateKind::RX, {0}, 2.0 * params.betas[layer]};
    for (std::size_t q = 0; q < num_qubits; ++q) {
      Gate g = mixer;
      g.qubits[0] = q;
      apply_gate(state, g);
    }
  }
  return state;
}

StateVector qaoa_state_fast(const IsingModel& ising, const QaoaParams& params) {
  const std::vector<double> diag = cost_diagonal(ising);
  return qaoa_state_fast(diag, ising.num_qubits, params);
}

Circuit qaoa_circuit(const IsingModel& ising, std::size_t layers) {
  if (layers == 0) throw std::invalid_argument("QAOA needs at least one layer");
  const std::size_t n = ising.num_qubits;
  Circuit c(n);
  for (std::size_t q = 0; q < n; ++q) c.h(q);
  for (std::size_t layer = 0; layer < layers; ++layer) {
    const std::size_t beta = layer;
    const std::size_t gamma = layers + layer;
    for (std::size_t q = 0; q < n; ++q) {
      if (ising.h_lin[q] != 0.0) c.param_rotation(GateKind::RZ, {q}, gamma, 2.0 * ising.h_lin[q]);
    }
    // h_quad is ordered by (i, j), so RZZ gates come out lexicographically.
    for (const auto& [ij, h] : ising.h_quad) {
      if (h != 0.0) c.param_rotation(GateKind::RZZ, {ij.first, ij.second}, gamma, 2.0 * h);
    }
    for (std::size_t q = 0; q < n; ++q) c.param_rotation(GateKind::RX, {q}, beta, 2.0);
  }
  return c;
}

Circuit vqe_circuit(std::size_t num_qubits, std::size_t layers) {
  if (num_qubits < 2) throw std::invalid_argument("two-local ansatz needs at least two qubits");
  if (layers == 0) throw std::invalid_argument("two-local ansatz needs at least one layer");
  Circuit c(num_qubits);
  for (std::size_t layer = 0; layer <= layers; ++layer) {
    for (std::size_t q = 0; q < num_qubits; ++q) {
      c.param_rotation(GateKind::RY, {q}, q + layer * num_qubits, 1.0);
    }
    if (layer == layers) break;
    for (std::size_t q = 0; q + 1 < num_qubits; ++q) c.cx(q, q + 1);
  }
  return c;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return out;
}

StateVector vqe_state(std::size_t num_qubits, std::size_t layers, std::span<const double> thetas) {
  VqeParams{std::vector<double>(thetas.begin(), thetas.end()), layers, num_qubits}.validate();
  return run_circuit(vqe_circuit(num_qubits, layers).bind(thetas));
}

namespace {

double measured_energy(const StateVector& state, const std::vector<double>& diag, std::uint64_t shots,
                       std::uint64_t seed) {
  if (shots == 0) return expectation_diagonal(state, diag);
  const SampleSet s = sample(state, shots, seed);
  double e = 0.0;
  for (const auto& [b, n] : s.counts) e += static_cast<double>(n) * diag[b];
  return e / static_cast<double>(s.shots);
}

}  // namespace

EnergyFn qaoa_energy(std::vector<double> diag, std::size_t num_qubits, const EnergyOptions& options) {
  if (diag.size() != basis_size(num_qubits)) throw std::invalid_argument("cost diagonal size mismatch");
  auto calls = std::make_shared<std::uint64_t>(0);
  return [diag = std::move(diag), num_qubits, options, calls](std::span<const double> x) {
    const StateVector state = qaoa_state_fast(diag, num_qubits, QaoaParams::from_flat(x));
    return measured_energy(state, diag, options.shots, options.seed + (*calls)++);
  };
}

EnergyFn vqe_energy(std::vector<double> diag, std::size_t num_qubits, std::size_t layers,
                    const EnergyOptions& options) {
  if (diag.size() != basis_size(num_qubits)) throw std::invalid_argument("cost diagonal size mismatch");
  auto circuit = std::make_shared<const Circuit>(vqe_circuit(num_qubits, layers));
  auto calls = std::make_shared<std::uint64_t>(0);
  return [diag = std::move(diag), circuit, options, calls](std::span<const double> x) {
    if (x.size() != circuit->num_parameters()) throw std::invalid_argument("VQE parameter count mismatch");
    const StateVector state = run_circuit(circuit->bind(x));
    return measured_energy(state, diag, options.shots, options.seed + (*calls)++);
  };
}

Landscape cost_landscape(const IsingModel& ising, const LandscapeOptions& options) {
  if (options.resolution == 0) throw std::invalid_argument("landscape resolution must be positive");
  const std::vector<double> diag = cost_diagonal(ising);
  Landscape land;
  land.beta_axis = linspace(0.0, std::numbers::pi, options.resolution);
  land.gamma_axis = linspace(0.0, std::numbers::pi, options.resolution);
  land.grid.assign(options.resolution, std::vector<double>(options.resolution, 0.0));
  for (std::size_t i = 0; i < options.resolution; ++i) {
    for (std::size_t j = 0; j < options.resolution; ++j) {
      const QaoaParams params{{land.beta_axis[i]}, {land.gamma_axis[j]}};
      const StateVector state = qaoa_state_fast(diag, ising.num_qubits, params);
      land.grid[i][j] = measured_energy(state, diag, options.shots, options.seed + i * options.resolution + j);
      ++land.evaluations;
    }
  }
  return land;
}

}  // namespace qopt
