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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qopt {

enum class GateKind { H, X, SX, RX, RY, RZ, RZZ, CX, CZ, SWAP, MEASURE };

std::string_view gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);

/// Number of qubit operands the gate acts on.
std::size_t gate_arity(GateKind kind);
bool is_rotation(GateKind kind);
bool is_two_qubit(GateKind kind);

/// Binds a rotation angle to scale * params[index] + offset.
struct ParamRef {
  std::size_t index = 0;
  double scale = 1.0;

  bool operator==(const ParamRef&) const = default;
};

/// One instruction. Qubit operands are 0-based; for CX the first operand is
/// the control. Rotations use exp(-i angle/2 P).
struct Gate {
  GateKind kind = GateKind::H;
  std::vector<std::size_t> qubits;
  double angle = 0.0;
  std::optional<ParamRef> param;

  bool operator==(const Gate&) const = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_parameters() const { return num_parameters_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Appends a gate after checking arity and operand range.
  /// Throws std::out_of_range / std::invalid_argument.
  Circuit& add(Gate gate);

  Circuit& h(std::size_t q) { return add({GateKind::H, {q}}); }
  Circuit& x(std::size_t q) { return add({GateKind::X, {q}}); }
  Circuit& sx(std::size_t q) { return add({GateKind::SX, {q}}); }
  Circuit& rx(std::size_t q, double a) { return add({GateKind::RX, {q}, a}); }
  Circuit& ry(std::size_t q, double a) { return add({GateKind::RY, {q}, a}); }
  Circuit& rz(std::size_t q, double a) { return add({GateKind::RZ, {q}, a}); }
  Circuit& rzz(std::size_t a, std::size_t b, double angle) { return add({GateKind::RZZ, {a, b}, angle}); }
  Circuit& cx(std::size_t control, std::size_t target) { return add({GateKind::CX, {control, target}}); }
  Circuit& cz(std::size_t a, std::size_t b) { return add({GateKind::CZ, {a, b}}); }
  Circuit& swap(std::size_t a, std::size_t b) { return add({GateKind::SWAP, {a, b}}); }
  Circuit& measure(std::size_t q) { return add({GateKind::MEASURE, {q}}); }

  /// Rotation whose angle is scale * params[index].
  Circuit& param_rotation(GateKind kind, std::vector<std::size_t> qubits, std::size_t index, double scale);

  /// Replaces every parameter reference with a concrete angle.
  Circuit bind(std::span<const double> params) const;
  bool is_bound() const;

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t num_qubits_ = 0;
  std::size_t num_parameters_ = 0;
  std::vector<Gate> gates_;
};

}  // namespace qopt
