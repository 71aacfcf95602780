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

#include "qopt/simulator.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qopt {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr Complex kI{0.0, 1.0};

void check_operands(const StateVector& state, const Gate& gate) {
  if (gate.qubits.size() != gate_arity(gate.kind)) {
    throw std::invalid_argument(std::string(gate_name(gate.kind)) + " has wrong operand count");
  }
  for (std::size_t q : gate.qubits) {
    if (q >= state.num_qubits()) {
      throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                              std::to_string(state.num_qubits()) + "-qubit state");
    }
  }
  if (gate.qubits.size() == 2 && gate.qubits[0] == gate.qubits[1]) {
    throw std::invalid_argument("two-qubit gate operands must be distinct");
  }
  if (gate.param) throw std::invalid_argument("gate has an unbound parameter");
}

void apply_single(std::span<Complex> amps, std::size_t q, const Matrix2& m) {
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a0 = amps[i];
      const Complex a1 = amps[i + stride];
      amps[i] = m[0] * a0 + m[1] * a1;
      amps[i + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits > kMaxStateQubits) {
    throw std::length_error("statevector limited to " + std::to_string(kMaxStateQubits) + " qubits");
  }
  amps_.assign(basis_size(num_qubits), Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t num_qubits, Bits b) {
  StateVector s(num_qubits);
  if (b >= s.dimension()) throw std::out_of_range("basis index exceeds dimension");
  s.amps_[0] = 0.0;
  s.amps_[b] = 1.0;
  return s;
}

StateVector StateVector::uniform(std::size_t num_qubits) {
  StateVector s(num_qubits);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.dimension()));
  std::fill(s.amps_.begin(), s.amps_.end(), Complex{a, 0.0});
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
    throw std::invalid_argument("amplitude count must be a power of two");
  }
  StateVector s;
  s.num_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
  if (s.num_qubits_ > kMaxStateQubits) throw std::length_error("too many qubits");
  s.amps_ = std::move(amplitudes);
  return s;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return s;
}

Matrix2 single_qubit_matrix(const Gate& gate) {
  const double c = std::cos(gate.angle / 2.0);
  const double s = std::sin(gate.angle / 2.0);
  switch (gate.kind) {
    case GateKind::H:
      return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    case GateKind::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::SX:
      return {Complex{0.5, 0.5}, Complex{0.5, -0.5}, Complex{0.5, -0.5}, Complex{0.5, 0.5}};
    case GateKind::RX:
      return {c, -kI * s, -kI * s, c};
    case GateKind::RY:
      return {c, -s, s, c};
    case GateKind::RZ:
      return {std::exp(-kI * (gate.angle / 2.0)), 0.0, 0.0, std::exp(kI * (gate.angle / 2.0))};
    default:
      throw std::invalid_argument(std::string(gate_name(gate.kind)) + " is not a single-qubit unitary");
  }
}

void apply_gate(StateVector& state, const Gate& gate) {
  check_operands(state, gate);
  auto amps = state.amplitudes();
  switch (gate.kind) {
    case GateKind::MEASURE:
      return;
    case GateKind::RZZ: {
      const Bits ma = Bits{1} << gate.qubits[0];
      const Bits mb = Bits{1} << gate.qubits[1];
      const Complex same = std::exp(-kI * (gate.angle / 2.0));
      const Complex diff = std::exp(kI * (gate.angle / 2.0));
      for (std::size_t i = 0; i < amps.size(); ++i) {
        const bool parity = ((i & ma) != 0) != ((i & mb) != 0);
        amps[i] *= parity ? diff : same;
      }
      return;
    }
    case GateKind::CX: {
      const Bits mc = Bits{1} << gate.qubits[0];
      const Bits mt = Bits{1} << gate.qubits[1];
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mc) && !(i & mt)) std::swap(amps[i], amps[i | mt]);
      }
      return;
    }
    case GateKind::CZ: {
      const Bits m = (Bits{1} << gate.qubits[0]) | (Bits{1} << gate.qubits[1]);
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & m) == m) amps[i] = -amps[i];
      }
      return;
    }
    case GateKind::SWAP: {
      const Bits ma = Bits{1} << gate.qubits[0];
      const Bits mb = Bits{1} << gate.qubits[1];
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & ma) && !(i & mb)) std::swap(amps[i], amps[(i & ~ma) | mb]);
      }
      return;
    }
    default:
      apply_single(amps, gate.qubits[0], single_qubit_matrix(gate));
  }
}

void apply_diagonal_phase(StateVector& state, std::span<const double> phases, double scale) {
  if (phases.size() != state.dimension()) throw std::invalid_argument("phase table size mismatch");
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double theta = -scale * phases[i];
    amps[i] *= Complex{std::cos(theta), std::sin(theta)};
  }
}

StateVector run_circuit(const Circuit& circuit, StateVector initial) {
  if (initial.num_qubits() != circuit.num_qubits()) {
    throw std::invalid_argument("initial state and circuit qubit counts differ");
  }
  for (const Gate& g : circuit.gates()) apply_gate(initial, g);
  return initial;
}

StateVector run_circuit(const Circuit& circuit) { return run_circuit(circuit, StateVector(circuit.num_qubits())); }

void SampleSet::add(Bits b, std::uint64_t n) {
  counts[b] += n;
  shots += n;
}

SampleSet sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be at least 1");
  const std::vector<double> p = state.probabilities();
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> dist(p.begin(), p.end());
  SampleSet out;
  out.num_bits = state.num_qubits();
  for (std::uint64_t s = 0; s < shots; ++s) out.add(dist(rng));
  return out;
}

double expectation_diagonal(const StateVector& state, std::span<const double> diag) {
  if (diag.size() != state.dimension()) throw std::invalid_argument("diagonal size mismatch");
  double e = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) e += std::norm(amps[i]) * diag[i];
  return e;
}

double expectation_diagonal(const StateVector& state, const std::function<double(Bits)>& diag_cost) {
  double e = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p != 0.0) e += p * diag_cost(i);
  }
  return e;
}

}  // namespace qopt
