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

#include "qopt/circuit.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace qopt {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 11> kNames{{
    {GateKind::H, "h"},
    {GateKind::X, "x"},
    {GateKind::SX, "sx"},
    {GateKind::RX, "rx"},
    {GateKind::RY, "ry"},
    {GateKind::RZ, "rz"},
    {GateKind::RZZ, "rzz"},
    {GateKind::CX, "cx"},
    {GateKind::CZ, "cz"},
    {GateKind::SWAP, "swap"},
    {GateKind::MEASURE, "measure"},
}};

}  // namespace

std::string_view gate_name(GateKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

GateKind gate_kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

std::size_t gate_arity(GateKind kind) { return is_two_qubit(kind) ? 2 : 1; }

bool is_rotation(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ || kind == GateKind::RZZ;
}

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::RZZ || kind == GateKind::CX || kind == GateKind::CZ || kind == GateKind::SWAP;
}

Circuit& Circuit::add(Gate gate) {
  if (gate.qubits.size() != gate_arity(gate.kind)) {
    throw std::invalid_argument(std::string(gate_name(gate.kind)) + " takes " +
                                std::to_string(gate_arity(gate.kind)) + " operand(s)");
  }
  for (std::size_t q : gate.qubits) {
    if (q >= num_qubits_) {
      throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                              std::to_string(num_qubits_) + "-qubit circuit");
    }
  }
  if (gate.qubits.size() == 2 && gate.qubits[0] == gate.qubits[1]) {
    throw std::invalid_argument("two-qubit gate operands must be distinct");
  }
  if (gate.param) {
    if (!is_rotation(gate.kind)) throw std::invalid_argument("only rotations take parameters");
    num_parameters_ = std::max(num_parameters_, gate.param->index + 1);
  }
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::param_rotation(GateKind kind, std::vector<std::size_t> qubits, std::size_t index,
                                 double scale) {
  return add({kind, std::move(qubits), 0.0, ParamRef{index, scale}});
}

Circuit Circuit::bind(std::span<const double> params) const {
  if (params.size() != num_parameters_) {
    throw std::invalid_argument("circuit expects " + std::to_string(num_parameters_) + " parameters, got " +
                                std::to_string(params.size()));
  }
  Circuit out(num_qubits_);
  out.gates_.reserve(gates_.size());
  for (const Gate& g : gates_) {
    Gate bound = g;
    if (g.param) {
      bound.angle = g.param->scale * params[g.param->index] + g.angle;
      bound.param.reset();
    }
    out.gates_.push_back(std::move(bound));
  }
  return out;
}

bool Circuit::is_bound() const {
  return std::none_of(gates_.begin(), gates_.end(), [](const Gate& g) { return g.param.has_value(); });
}

}  // namespace qopt
