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
#include <optional>
#include <span>
#include <vector>

#include "qopt/model.hpp"
#include "qopt/quality.hpp"
#include "qopt/simulator.hpp"
#include "qopt/usecases.hpp"

namespace qopt {

/// H(t) = -a(t)/2 sum_i X_i + b(t)/2 H_C on t in [0, total_time].
struct AnnealSchedule {
  double total_time = 1.0;
  std::function<double(double)> a;
  std::function<double(double)> b;

  /// a(t) = 1 - t/T, b(t) = t/T.
  static AnnealSchedule linear(double total_time);
};

struct SaConfig {
  std::size_t num_reads = 400;
  std::size_t sweeps = 1000;
  /// Defaults: T_hot = max |Q_ij|, T_cold = 0.01 T_hot.
  std::optional<double> t_hot;
  std::optional<double> t_cold;
  std::uint64_t seed = 0;
};

/// One Metropolis chain per read over a geometric temperature ladder; each
/// read contributes its final state. Read k uses the RNG stream (seed, k).
SampleSet sa_sample(const QuboProblem& qubo, const SaConfig& cfg);

inline constexpr std::size_t kMaxTrotterQubits = 12;

/// First-order Trotter evolution from |+>^n: per step an RX(-a dt) mixer on
/// every qubit followed by the diagonal phase exp(-i b dt/2 cost(b)), with
/// a and b taken at the step midpoint.
StateVector qa_trotter(const IsingModel& ising, const AnnealSchedule& schedule, double dt);

// ---------------------------------------------------------------------------

struct SweepInstance {
  QuboProblem qubo;
  Decoder decoder;
  double optimal_cost = 0.0;
};

/// Builds the instance for a penalty value.
using InstanceFamily = std::function<SweepInstance(double rho)>;

enum class SweepAxis { Penalty, AnnealTime };

struct SweepRow {
  double axis_value = 0.0;
  double feasible_pct = 0.0;
  double optimal_pct = 0.0;
  std::size_t reads = 0;
};

/// Samples each axis value with sa_sample and scores the reads. On the
/// anneal-time axis the value is the sweep count per read and the family is
/// evaluated at `fixed_rho`. Rows come out in ascending axis order.
std::vector<SweepRow> sweep(const InstanceFamily& family, SweepAxis axis, std::span<const double> values,
                            const SaConfig& cfg, double fixed_rho = 1.0);

/// Family over a LamA spec; the optimum comes from brute force (throws
/// std::length_error above the cap).
InstanceFamily lama_family(const LamaSpec& spec, std::size_t cap = kDefaultBruteForceCap);

/// Family over a routing spec; the optimum comes from enumerating all tours.
InstanceFamily trp_family(const TrpSpec& spec);

}  // namespace qopt
