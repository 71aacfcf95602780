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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qopt/model.hpp"
#include "qopt/quality.hpp"

namespace qopt {

// ---------------------------------------------------------------------------
// Charging schedules at a single station with four charging levels.

struct LamaSpec {
  std::size_t num_timeslots = 1;
  std::size_t num_cars = 1;
  /// Allowed slots per car.
  std::vector<std::vector<std::size_t>> availability;
  /// Energy per car in level units summed over slots.
  std::vector<int> required_energy;
  int num_levels = 4;

  void validate() const;
  bool available(std::size_t car, std::size_t slot) const;
  std::size_t num_qubits() const { return 2 * num_cars * num_timeslots; }
};

/// Integer model plus its 2-bit-per-variable encoding. Variable (car c,
/// slot t) has index c*T + t and owns bits 2(c*T+t) (low) and 2(c*T+t)+1.
struct LamaModel {
  QcioProblem qcio;
  BinaryEncoding encoding;
};

/// Levels[c][t] in {0..3}.
struct Schedule {
  std::vector<std::vector<int>> levels;

  std::vector<int> slot_loads() const;
};

struct DecodedSchedule {
  Schedule schedule;
  bool feasible = false;
};

/// Objective sum_t (sum_c x_{c,t})^2; constraints: each car reaches its
/// energy within its window and stays at level 0 elsewhere.
LamaModel build_lama(const LamaSpec& spec);

QuboProblem lama_qubo(const LamaSpec& spec, double rho);

DecodedSchedule decode_lama(Bits b, const LamaSpec& spec);
/// Checked variant; throws std::invalid_argument on a length mismatch.
DecodedSchedule decode_lama(std::string_view bits, const LamaSpec& spec);

/// Feasibility plus the QUBO cost of b, for solution_rates().
Decoder lama_decoder(const LamaSpec& spec, const QuboProblem& qubo);

/// Named example series Ex0p1 .. Ex2p4 (T = 3/4, C = 1/2) with growing
/// overlap of the car windows.
const std::map<std::string, LamaSpec>& lama_examples();
const LamaSpec& lama_example(std::string_view name);

/// A dense instance of arbitrary size: every car may use every slot.
LamaSpec lama_full_window(std::size_t num_timeslots, std::size_t num_cars, int energy);

// ---------------------------------------------------------------------------
// Truck routing on a closed tour.

enum class CityLayout { Symmetric, Asymmetric };

std::string_view layout_name(CityLayout layout);
CityLayout layout_from_name(std::string_view name);

struct TrpSpec {
  std::size_t num_cities = 0;
  Matrix distances;
  CityLayout layout = CityLayout::Symmetric;
  double rho = 1.0;
  /// City coordinates when generated, for export.
  std::vector<std::pair<double, double>> coordinates;

  void validate() const;
  std::size_t num_vars() const { return num_cities * num_cities; }
  /// Bit index of "city i at time t".
  std::size_t var(std::size_t city, std::size_t time) const { return city * num_cities + time; }
};

struct Route {
  std::vector<std::size_t> order;  // order[t] = city visited at time t
};

struct DecodedRoute {
  Route route;
  bool feasible = false;
  double distance = 0.0;
};

/// Q = Q_d + Q_c over m^2 variables with distances scaled so max d_ij = 1
/// and a cyclic time index.
QuboProblem build_trp(const TrpSpec& spec);

/// Penalty-free distance part alone (scaled), and the constraint part alone.
QuboProblem trp_distance_part(const TrpSpec& spec);
QuboProblem trp_constraint_part(const TrpSpec& spec);

DecodedRoute decode_trp(Bits b, const TrpSpec& spec);
DecodedRoute decode_trp(std::string_view bits, const TrpSpec& spec);

Bits encode_route(const Route& route, const TrpSpec& spec);
double tour_length(const Route& route, const Matrix& distances);

Decoder trp_decoder(const TrpSpec& spec, const QuboProblem& qubo);

/// Seeded city placement: evenly on the unit circle, or uniform in the unit square.
TrpSpec gen_cities(std::size_t num_cities, CityLayout layout, std::uint64_t seed, double rho = 1.0);

struct RouteOracle {
  double optimal_cost = 0.0;  // QUBO cost of the best tour
  double optimal_distance = 0.0;
  std::vector<Route> optimal_routes;
  std::size_t routes_checked = 0;
};

/// Enumerates all m! tours.
RouteOracle trp_route_oracle(const TrpSpec& spec, const QuboProblem& qubo);

// ---------------------------------------------------------------------------

/// Spin form with b = (1 + x) / 2: H(x) = sum h_i x_i + sum_{i<j} J_ij x_i x_j + c.
struct SpinModel {
  std::map<std::pair<std::size_t, std::size_t>, double> J;
  std::vector<double> h;
  double c = 0.0;

  /// Spin of variable i is +1 when bit i is set.
  double energy(Bits b) const;
};

SpinModel ising_spin_form(const QuboProblem& qubo);

}  // namespace qopt
