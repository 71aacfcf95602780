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

#include "qopt/annealer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "qopt/optimizer.hpp"
#include "qopt/variational.hpp"

namespace qopt {

AnnealSchedule AnnealSchedule::linear(double total_time) {
  if (!(total_time >= 0.0)) throw std::invalid_argument("anneal time must be nonnegative");
  AnnealSchedule s;
  s.total_time = total_time;
  s.a = [total_time](double t) { return total_time == 0.0 ? 0.0 : 1.0 - t / total_time; };
  s.b = [total_time](double t) { return total_time == 0.0 ? 1.0 : t / total_time; };
  return s;
}

SampleSet sa_sample(const QuboProblem& qubo, const SaConfig& cfg) {
  const std::size_t n = qubo.num_vars();
  if (n == 0 || n > kMaxBits) throw std::invalid_argument("SA needs between 1 and 64 variables");
  if (cfg.num_reads == 0 || cfg.sweeps == 0) throw std::invalid_argument("SA needs at least one read and one sweep");

  // Symmetric couplings W_ij = Q_ij + Q_ji off the diagonal.
  Matrix W = qubo.Q + qubo.Q.transpose();
  W.diagonal().setZero();
  double scale = qubo.Q.cwiseAbs().maxCoeff();
  if (scale == 0.0) scale = 1.0;
  const double t_hot = cfg.t_hot.value_or(scale);
  const double t_cold = cfg.t_cold.value_or(0.01 * t_hot);
  if (!(t_hot > t_cold && t_cold > 0.0)) throw std::invalid_argument("SA needs T_hot > T_cold > 0");

  std::vector<double> temps(cfg.sweeps);
  for (std::size_t k = 0; k < cfg.sweeps; ++k) {
    const double frac = cfg.sweeps == 1 ? 1.0 : static_cast<double>(k) / static_cast<double>(cfg.sweeps - 1);
    temps[k] = t_hot * std::pow(t_cold / t_hot, frac);
  }

  SampleSet out;
  out.num_bits = n;
  std::vector<double> field(n);
  for (std::size_t read = 0; read < cfg.num_reads; ++read) {
    std::mt19937_64 rng = stream_rng(cfg.seed, read);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Bits b = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (u(rng) < 0.5) b |= Bits{1} << i;
    }
    // field[i] = cost change for switching bit i on
    for (std::size_t i = 0; i < n; ++i) {
      field[i] = qubo.Q(i, i);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && test_bit(b, j)) field[i] += W(i, j);
      }
    }
    for (double temp : temps) {
      for (std::size_t i = 0; i < n; ++i) {
        const bool on = test_bit(b, i);
        const double delta = on ? -field[i] : field[i];
        if (delta > 0.0 && u(rng) >= std::exp(-delta / temp)) continue;
        b = flip_bit(b, i);
        const double sign = on ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) field[j] += sign * W(j, i);
        }
      }
    }
    out.add(b);
  }
  return out;
}

StateVector qa_trotter(const IsingModel& ising, const AnnealSchedule& schedule, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("Trotter step must be positive");
  if (ising.num_qubits > kMaxTrotterQubits) {
    throw std::length_error("Trotter evolution limited to " + std::to_string(kMaxTrotterQubits) + " qubits");
  }
  if (!(schedule.total_time >= 0.0)) throw std::invalid_argument("anneal time must be nonnegative");
  const std::size_t n = ising.num_qubits;
  StateVector state = StateVector::uniform(n);
  if (schedule.total_time == 0.0) return state;
  const auto steps = static_cast<std::size_t>(std::ceil(schedule.total_time / dt - 1e-9));
  const double h = schedule.total_time / static_cast<double>(steps);
  const std::vector<double> diag = cost_diagonal(ising);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = (static_cast<double>(k) + 0.5) * h;
    const double a = schedule.a(t);
    const double b = schedule.b(t);
    for (std::size_t q = 0; q < n; ++q) apply_gate(state, Gate{GateKind::RX, {q}, -a * h});
    apply_diagonal_phase(state, diag, b * h / 2.0);
  }
  return state;
}

std::vector<SweepRow> sweep(const InstanceFamily& family, SweepAxis axis, std::span<const double> values,
                            const SaConfig& cfg, double fixed_rho) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<SweepRow> rows;
  rows.reserve(sorted.size());
  const SweepInstance fixed = axis == SweepAxis::AnnealTime ? family(fixed_rho) : SweepInstance{};
  for (double v : sorted) {
    SaConfig run = cfg;
    SweepInstance built;
    const SweepInstance* inst = &fixed;
    if (axis == SweepAxis::Penalty) {
      built = family(v);
      inst = &built;
    } else {
      if (v < 1.0) throw std::invalid_argument("anneal-time axis values are sweep counts >= 1");
      run.sweeps = static_cast<std::size_t>(std::llround(v));
    }
    const SampleSet s = sa_sample(inst->qubo, run);
    const SolutionRates r = solution_rates(s, inst->decoder, inst->optimal_cost);
    rows.push_back({v, r.feasible_pct, r.optimal_pct, static_cast<std::size_t>(s.shots)});
  }
  return rows;
}

InstanceFamily lama_family(const LamaSpec& spec, std::size_t cap) {
  spec.validate();
  if (spec.num_qubits() > cap) {
    throw std::length_error("no brute-force oracle for " + std::to_string(spec.num_qubits()) + " variables");
  }
  return [spec](double rho) {
    SweepInstance inst;
    inst.qubo = lama_qubo(spec, rho);
    inst.decoder = lama_decoder(spec, inst.qubo);
    double best = std::numeric_limits<double>::infinity();
    for (Bits b = 0; b < basis_size(spec.num_qubits()); ++b) {
      if (decode_lama(b, spec).feasible) best = std::min(best, inst.qubo.cost(b));
    }
    inst.optimal_cost = best;
    return inst;
  };
}

InstanceFamily trp_family(const TrpSpec& spec) {
  spec.validate();
  return [spec](double rho) {
    TrpSpec s = spec;
    s.rho = rho;
    SweepInstance inst;
    inst.qubo = build_trp(s);
    inst.decoder = trp_decoder(s, inst.qubo);
    inst.optimal_cost = trp_route_oracle(s, inst.qubo).optimal_cost;
    return inst;
  };
}

}  // namespace qopt
