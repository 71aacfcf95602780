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

#include "qopt/transpiler.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "qopt/simulator.hpp"

namespace qopt {

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

Edge normalized(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }

std::size_t parse_size(std::string_view text) {
  std::size_t n = 0;
  if (text.empty()) throw std::invalid_argument("missing qubit count in topology preset");
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad qubit count in topology preset");
    n = n * 10 + static_cast<std::size_t>(ch - '0');
  }
  return n;
}

}  // namespace

CouplingMap::CouplingMap(std::size_t num_qubits, std::vector<Edge> edges) : num_qubits_(num_qubits), adj_(num_qubits) {
  for (auto [a, b] : edges) {
    if (a >= num_qubits || b >= num_qubits) throw std::invalid_argument("coupling edge out of range");
    if (a == b) throw std::invalid_argument("coupling edge is a self-loop");
    const Edge e = normalized(a, b);
    if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) continue;
    edges_.push_back(e);
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

CouplingMap CouplingMap::line(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t q = 0; q + 1 < n; ++q) e.emplace_back(q, q + 1);
  return {n, e};
}

CouplingMap CouplingMap::ring(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t q = 0; q + 1 < n; ++q) e.emplace_back(q, q + 1);
  if (n > 2) e.emplace_back(n - 1, 0);
  return {n, e};
}

CouplingMap CouplingMap::full(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) e.emplace_back(a, b);
  }
  return {n, e};
}

CouplingMap CouplingMap::heavy_hex_27() {
  return {27, {{0, 1},   {1, 2},   {1, 4},   {2, 3},   {3, 5},   {4, 7},   {5, 8},
               {6, 7},   {7, 10},  {8, 9},   {8, 11},  {10, 12}, {11, 14}, {12, 13},
               {12, 15}, {13, 14}, {14, 16}, {15, 18}, {16, 19}, {17, 18}, {18, 21},
               {19, 20}, {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26}}};
}

CouplingMap CouplingMap::preset(std::string_view name) {
  if (name == "heavy-hex-27") return heavy_hex_27();
  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view kind = name.substr(0, colon);
    const std::size_t n = parse_size(name.substr(colon + 1));
    if (kind == "line") return line(n);
    if (kind == "ring") return ring(n);
    if (kind == "full") return full(n);
  }
  throw std::invalid_argument("unknown topology preset '" + std::string(name) + "'");
}

bool CouplingMap::connected(std::size_t a, std::size_t b) const {
  if (a >= num_qubits_ || b >= num_qubits_) return false;
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::size_t> CouplingMap::distances_from(std::size_t source) const {
  std::vector<std::size_t> dist(num_qubits_, kUnreachable);
  std::deque<std::size_t> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : adj_[v]) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Layout Layout::trivial(std::size_t n) {
  Layout l;
  l.logical_to_physical.resize(n);
  for (std::size_t q = 0; q < n; ++q) l.logical_to_physical[q] = q;
  return l;
}

void Layout::validate(std::size_t num_physical) const {
  std::vector<bool> used(num_physical, false);
  for (std::size_t p : logical_to_physical) {
    if (p >= num_physical) throw std::invalid_argument("layout maps outside the physical qubits");
    if (used[p]) throw std::invalid_argument("layout is not injective");
    used[p] = true;
  }
}

RoutedCircuit route(const Circuit& circuit, const CouplingMap& coupling, const Layout& layout, std::uint64_t seed) {
  if (layout.logical_to_physical.size() != circuit.num_qubits()) {
    throw std::invalid_argument("layout must cover every logical qubit");
  }
  layout.validate(coupling.num_qubits());
  std::mt19937_64 rng(seed);

  RoutedCircuit out{Circuit(coupling.num_qubits()), layout, layout, 0};
  std::vector<std::size_t>& phys = out.final_layout.logical_to_physical;
  std::vector<std::size_t> logical_at(coupling.num_qubits(), kUnreachable);
  for (std::size_t q = 0; q < phys.size(); ++q) logical_at[phys[q]] = q;

  auto do_swap = [&](std::size_t p, std::size_t r) {
    out.circuit.swap(p, r);
    ++out.swaps_inserted;
    std::swap(logical_at[p], logical_at[r]);
    if (logical_at[p] != kUnreachable) phys[logical_at[p]] = p;
    if (logical_at[r] != kUnreachable) phys[logical_at[r]] = r;
  };

  for (const Gate& g : circuit.gates()) {
    if (g.qubits.size() == 2) {
      const std::size_t target = phys[g.qubits[1]];
      const std::vector<std::size_t> dist = coupling.distances_from(target);
      std::size_t cur = phys[g.qubits[0]];
      if (dist[cur] == kUnreachable) {
        throw std::runtime_error("physical qubits " + std::to_string(cur) + " and " + std::to_string(target) +
                                 " are not connected");
      }
      while (dist[cur] > 1) {
        std::vector<std::size_t> next;
        for (std::size_t w : coupling.neighbors(cur)) {
          if (dist[w] + 1 == dist[cur]) next.push_back(w);
        }
        std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
        const std::size_t w = next[pick(rng)];
        do_swap(cur, w);
        cur = w;
      }
    }
    Gate mapped = g;
    for (std::size_t& q : mapped.qubits) q = phys[q];
    out.circuit.add(std::move(mapped));
  }
  return out;
}

TwoQubitBasis basis_from_name(std::string_view name) {
  if (name == "cx") return TwoQubitBasis::CX;
  if (name == "cz") return TwoQubitBasis::CZ;
  if (name == "ecr") return TwoQubitBasis::ECR;
  throw std::invalid_argument("unknown two-qubit basis '" + std::string(name) + "'");
}

namespace {

// Emits U (up to global phase) as RZ(lambda) SX RZ(theta+pi) SX RZ(phi+pi),
// where U ~ RZ(phi) RY(theta) RZ(lambda).
void emit_single_qubit(Circuit& out, std::size_t q, const Matrix2& u) {
  const Complex det = u[0] * u[3] - u[1] * u[2];
  const Complex norm = std::sqrt(det);
  const Complex a = u[0] / norm;
  const Complex b = u[2] / norm;
  const double theta = 2.0 * std::atan2(std::abs(b), std::abs(a));
  constexpr double eps = 1e-12;
  double phi = 0.0;
  double lambda = 0.0;
  if (std::abs(b) < eps) {
    phi = -2.0 * std::arg(a);
  } else if (std::abs(a) < eps) {
    phi = 2.0 * std::arg(b);
  } else {
    const double sum = -2.0 * std::arg(a);  // phi + lambda
    const double diff = 2.0 * std::arg(b);  // phi - lambda
    phi = (sum + diff) / 2.0;
    lambda = (sum - diff) / 2.0;
  }
  if (std::abs(b) < eps) {
    out.rz(q, phi + lambda);
    return;
  }
  out.rz(q, lambda);
  out.sx(q);
  out.rz(q, theta + std::numbers::pi);
  out.sx(q);
  out.rz(q, phi + std::numbers::pi);
}

void emit_hadamard(Circuit& out, std::size_t q) { emit_single_qubit(out, q, single_qubit_matrix(Gate{GateKind::H, {q}})); }

void emit_cx(Circuit& out, std::size_t control, std::size_t target, TwoQubitBasis basis) {
  if (basis == TwoQubitBasis::CZ) {
    emit_hadamard(out, target);
    out.cz(control, target);
    emit_hadamard(out, target);
  } else {
    out.cx(control, target);
  }
}

}  // namespace

Circuit decompose(const Circuit& circuit, TwoQubitBasis basis) {
  if (!circuit.is_bound()) throw std::invalid_argument("decompose needs a bound circuit");
  Circuit out(circuit.num_qubits());
  for (const Gate& g : circuit.gates()) {
    const auto& q = g.qubits;
    switch (g.kind) {
      case GateKind::RZ:
      case GateKind::SX:
      case GateKind::X:
      case GateKind::MEASURE:
        out.add(g);
        break;
      case GateKind::H:
      case GateKind::RX:
      case GateKind::RY:
        emit_single_qubit(out, q[0], single_qubit_matrix(g));
        break;
      case GateKind::CX:
        emit_cx(out, q[0], q[1], basis);
        break;
      case GateKind::CZ:
        if (basis == TwoQubitBasis::CZ) {
          out.add(g);
        } else {
          emit_hadamard(out, q[1]);
          out.cx(q[0], q[1]);
          emit_hadamard(out, q[1]);
        }
        break;
      case GateKind::RZZ:
        emit_cx(out, q[0], q[1], basis);
        out.rz(q[1], g.angle);
        emit_cx(out, q[0], q[1], basis);
        break;
      case GateKind::SWAP:
        emit_cx(out, q[0], q[1], basis);
        emit_cx(out, q[1], q[0], basis);
        emit_cx(out, q[0], q[1], basis);
        break;
      default:
        throw std::invalid_argument("cannot decompose gate '" + std::string(gate_name(g.kind)) + "'");
    }
  }
  return out;
}

std::size_t count_two_qubit(const Circuit& circuit) {
  std::size_t n = 0;
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::CX || g.kind == GateKind::CZ) {
      ++n;
    } else if (g.kind == GateKind::RZZ || g.kind == GateKind::SWAP) {
      throw std::invalid_argument("count_two_qubit expects a decomposed circuit");
    }
  }
  return n;
}

ErrorMap ErrorMap::uniform(const CouplingMap& coupling, double e1, double e2, double emeas) {
  ErrorMap m;
  m.single_qubit.assign(coupling.num_qubits(), e1);
  m.measurement.assign(coupling.num_qubits(), emeas);
  for (const Edge& e : coupling.edges()) m.two_qubit[e] = e2;
  m.validate();
  return m;
}

void ErrorMap::validate() const {
  auto check = [](double e) {
    if (!(e >= 0.0 && e <= 1.0)) throw std::invalid_argument("error rates must lie in [0, 1]");
  };
  for (double e : single_qubit) check(e);
  for (double e : measurement) check(e);
  for (const auto& [edge, e] : two_qubit) check(e);
}

double ErrorMap::error(const Gate& gate) const {
  auto missing = [&] {
    return std::out_of_range("no error entry for " + std::string(gate_name(gate.kind)) + " on qubit " +
                             std::to_string(gate.qubits.at(0)));
  };
  if (gate.kind == GateKind::RZ) return 0.0;
  const std::size_t q = gate.qubits.at(0);
  if (gate.kind == GateKind::MEASURE) {
    if (q >= measurement.size()) throw missing();
    return measurement[q];
  }
  if (gate.qubits.size() == 2) {
    auto it = two_qubit.find(normalized(gate.qubits[0], gate.qubits[1]));
    if (it == two_qubit.end()) throw missing();
    return it->second;
  }
  if (q >= single_qubit.size()) throw missing();
  return single_qubit[q];
}

double circuit_score(const Circuit& circuit, const ErrorMap& errors) {
  double score = 1.0;
  for (const Gate& g : circuit.gates()) score *= 1.0 - errors.error(g);
  return score;
}

namespace {

using CMatrix = Eigen::MatrixXcd;

// Embeds a 2x2 (k = 1) or 4x4 (k = 2) local matrix acting on `qubits`; the
// local index is bit qubits[0] + 2 * bit qubits[1].
CMatrix embed(const CMatrix& local, const std::vector<std::size_t>& qubits, std::size_t n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix full = CMatrix::Zero(dim, dim);
  std::size_t mask = 0;
  for (std::size_t q : qubits) mask |= std::size_t{1} << q;
  auto local_index = [&](std::size_t i) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) k |= ((i >> qubits[j]) & 1U) << j;
    return k;
  };
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      if ((ui & ~mask) != (uj & ~mask)) continue;
      full(i, j) = local(static_cast<Eigen::Index>(local_index(ui)), static_cast<Eigen::Index>(local_index(uj)));
    }
  }
  return full;
}

CMatrix local_matrix(const Gate& g) {
  const Complex i{0.0, 1.0};
  switch (g.kind) {
    case GateKind::CX: {  // control = local bit 0
      CMatrix m = CMatrix::Zero(4, 4);
      m(0, 0) = m(2, 2) = 1.0;
      m(3, 1) = m(1, 3) = 1.0;
      return m;
    }
    case GateKind::CZ: {
      CMatrix m = CMatrix::Identity(4, 4);
      m(3, 3) = -1.0;
      return m;
    }
    case GateKind::SWAP: {
      CMatrix m = CMatrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = 1.0;
      m(1, 2) = m(2, 1) = 1.0;
      return m;
    }
    case GateKind::RZZ: {
      CMatrix m = CMatrix::Zero(4, 4);
      const Complex same = std::exp(-i * (g.angle / 2.0));
      const Complex diff = std::exp(i * (g.angle / 2.0));
      m(0, 0) = m(3, 3) = same;
      m(1, 1) = m(2, 2) = diff;
      return m;
    }
    default: {
      const Matrix2 u = single_qubit_matrix(g);
      CMatrix m(2, 2);
      m << u[0], u[1], u[2], u[3];
      return m;
    }
  }
}

}  // namespace

Eigen::MatrixXcd unitary_of(const Circuit& circuit) {
  const std::size_t n = circuit.num_qubits();
  if (n > kMaxUnitaryQubits) throw std::length_error("unitary_of limited to 6 qubits");
  if (!circuit.is_bound()) throw std::invalid_argument("unitary_of needs a bound circuit");
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix u = CMatrix::Identity(dim, dim);
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::MEASURE) continue;
    u = embed(local_matrix(g), g.qubits, n) * u;
  }
  return u;
}

Eigen::MatrixXcd layout_permutation(const Layout& layout) {
  const std::size_t n = layout.logical_to_physical.size();
  layout.validate(n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix p = CMatrix::Zero(dim, dim);
  for (std::size_t b = 0; b < static_cast<std::size_t>(dim); ++b) {
    std::size_t image = 0;
    for (std::size_t q = 0; q < n; ++q) image |= ((b >> q) & 1U) << layout.logical_to_physical[q];
    p(static_cast<Eigen::Index>(image), static_cast<Eigen::Index>(b)) = 1.0;
  }
  return p;
}

double phase_insensitive_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(a(r, c)) == 0.0) return b.cwiseAbs().maxCoeff();
  Complex phase = b(r, c) / a(r, c);
  if (std::abs(phase) == 0.0) return std::numeric_limits<double>::infinity();
  phase /= std::abs(phase);
  return (a * phase - b).cwiseAbs().maxCoeff();
}

}  // namespace qopt
