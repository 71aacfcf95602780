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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "qopt/bits.hpp"
#include "qopt/circuit.hpp"

namespace qopt {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxStateQubits = 26;

/// Dense 2^n amplitude vector. Amplitude index b has qubit i in bit i.
class StateVector {
 public:
  /// |0...0> on n qubits. Throws std::length_error above kMaxStateQubits.
  explicit StateVector(std::size_t num_qubits);

  static StateVector basis(std::size_t num_qubits, Bits b);
  /// |+>^n
  static StateVector uniform(std::size_t num_qubits);
  /// Takes ownership of amplitudes; size must be a power of two.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }

  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }

  std::vector<double> probabilities() const;
  double norm_squared() const;

 private:
  StateVector() = default;
  std::size_t num_qubits_ = 0;
  std::vector<Complex> amps_;
};

/// Row-major 2x2 matrix of a bound single-qubit gate.
using Matrix2 = std::array<Complex, 4>;
Matrix2 single_qubit_matrix(const Gate& gate);

/// Applies a bound gate in place. MEASURE is a no-op on the state (terminal
/// measurement is modelled by sample()).
void apply_gate(StateVector& state, const Gate& gate);

/// Applies exp(-i phase(b)) to each amplitude.
void apply_diagonal_phase(StateVector& state, std::span<const double> phases, double scale);

StateVector run_circuit(const Circuit& circuit, StateVector initial);
StateVector run_circuit(const Circuit& circuit);

struct SampleSet {
  std::map<Bits, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::size_t num_bits = 0;

  void add(Bits b, std::uint64_t n = 1);
};

/// Multinomial draw of `shots` outcomes; deterministic for a fixed seed.
SampleSet sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

double expectation_diagonal(const StateVector& state, std::span<const double> diag);
double expectation_diagonal(const StateVector& state, const std::function<double(Bits)>& diag_cost);

}  // namespace qopt
