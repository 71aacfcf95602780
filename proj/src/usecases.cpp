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

#include "qopt/usecases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace qopt {

namespace {

Bits bits_checked(std::string_view text, std::size_t expected) {
  if (text.size() != expected) {
    throw std::invalid_argument("bitstring has length " + std::to_string(text.size()) + ", expected " +
                                std::to_string(expected));
  }
  return bits_from_string(text);
}

void add_upper(Matrix& Q, std::size_t a, std::size_t b, double v) {
  if (a == b) {
    Q(a, a) += v;
  } else {
    Q(std::min(a, b), std::max(a, b)) += v;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

void LamaSpec::validate() const {
  if (num_timeslots < 1 || num_cars < 1) throw std::invalid_argument("LamA needs at least one slot and one car");
  if (num_levels != 4) throw std::invalid_argument("LamA uses exactly four charging levels");
  if (availability.size() != num_cars || required_energy.size() != num_cars) {
    throw std::invalid_argument("availability and energy need one entry per car");
  }
  if (2 * num_cars * num_timeslots >= kMaxBits) throw std::invalid_argument("LamA instance exceeds 63 qubits");
  for (std::size_t c = 0; c < num_cars; ++c) {
    const auto& slots = availability[c];
    if (slots.empty()) throw std::invalid_argument("car " + std::to_string(c) + " has no available slot");
    for (std::size_t t : slots) {
      if (t >= num_timeslots) throw std::invalid_argument("availability slot out of range");
    }
    std::vector<std::size_t> sorted(slots);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("duplicate availability slot");
    }
    const int capacity = 3 * static_cast<int>(slots.size());
    if (required_energy[c] < 0 || required_energy[c] > capacity) {
      throw std::invalid_argument("car " + std::to_string(c) + " requires " + std::to_string(required_energy[c]) +
                                  " but can charge at most " + std::to_string(capacity));
    }
  }
}

bool LamaSpec::available(std::size_t car, std::size_t slot) const {
  const auto& s = availability.at(car);
  return std::find(s.begin(), s.end(), slot) != s.end();
}

std::vector<int> Schedule::slot_loads() const {
  std::vector<int> loads(levels.empty() ? 0 : levels.front().size(), 0);
  for (const auto& car : levels) {
    for (std::size_t t = 0; t < car.size(); ++t) loads[t] += car[t];
  }
  return loads;
}

LamaModel build_lama(const LamaSpec& spec) {
  spec.validate();
  const std::size_t T = spec.num_timeslots;
  const std::size_t C = spec.num_cars;
  const auto n = static_cast<Eigen::Index>(C * T);
  auto var = [T](std::size_t c, std::size_t t) { return static_cast<Eigen::Index>(c * T + t); };

  LamaModel model;
  QcioProblem& q = model.qcio;
  q.M = Matrix::Zero(n, n);
  q.l = Vector::Zero(n);
  q.c = 0.0;
  q.A = Matrix::Zero(n, n);
  q.r = Vector::Zero(n);
  q.lower.assign(static_cast<std::size_t>(n), 0);
  q.upper.assign(static_cast<std::size_t>(n), spec.num_levels - 1);

  // (sum_c x_{c,t})^2 for every slot
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t c1 = 0; c1 < C; ++c1) {
      for (std::size_t c2 = 0; c2 < C; ++c2) q.M(var(c1, t), var(c2, t)) = 1.0;
    }
  }

  Eigen::Index row = 0;
  for (std::size_t c = 0; c < C; ++c, ++row) {
    for (std::size_t t : spec.availability[c]) q.A(row, var(c, t)) = 1.0;
    q.r[row] = spec.required_energy[c];
  }
  for (std::size_t c = 0; c < C; ++c) {
    for (std::size_t t = 0; t < T; ++t) {
      if (spec.available(c, t)) continue;
      q.A(row, var(c, t)) = 1.0;
      ++row;
    }
  }
  model.encoding = BinaryEncoding::uniform(static_cast<std::size_t>(n), 2);
  return model;
}

QuboProblem lama_qubo(const LamaSpec& spec, double rho) {
  const LamaModel model = build_lama(spec);
  return encode_binary(build_quio(model.qcio, rho), model.encoding);
}

DecodedSchedule decode_lama(Bits b, const LamaSpec& spec) {
  spec.validate();
  DecodedSchedule out;
  out.schedule.levels.assign(spec.num_cars, std::vector<int>(spec.num_timeslots, 0));
  out.feasible = true;
  for (std::size_t c = 0; c < spec.num_cars; ++c) {
    int energy = 0;
    for (std::size_t t = 0; t < spec.num_timeslots; ++t) {
      const std::size_t v = c * spec.num_timeslots + t;
      const int level = (test_bit(b, 2 * v) ? 1 : 0) + (test_bit(b, 2 * v + 1) ? 2 : 0);
      out.schedule.levels[c][t] = level;
      if (spec.available(c, t)) {
        energy += level;
      } else if (level != 0) {
        out.feasible = false;
      }
    }
    if (energy != spec.required_energy[c]) out.feasible = false;
  }
  return out;
}

DecodedSchedule decode_lama(std::string_view bits, const LamaSpec& spec) {
  return decode_lama(bits_checked(bits, spec.num_qubits()), spec);
}

Decoder lama_decoder(const LamaSpec& spec, const QuboProblem& qubo) {
  return [spec, qubo](Bits b) { return Decoded{decode_lama(b, spec).feasible, qubo.cost(b)}; };
}

const std::map<std::string, LamaSpec>& lama_examples() {
  static const std::map<std::string, LamaSpec> examples = [] {
    auto one = [](std::size_t T, std::vector<std::size_t> window) {
      return LamaSpec{T, 1, {std::move(window)}, {4}};
    };
    auto two = [](std::vector<std::size_t> w1, std::vector<std::size_t> w2) {
      return LamaSpec{4, 2, {std::move(w1), std::move(w2)}, {4, 4}};
    };
    std::map<std::string, LamaSpec> m;
    m["Ex0p1"] = one(3, {0, 1});
    m["Ex0p2"] = one(3, {0, 1, 2});
    m["Ex1p1"] = one(4, {0, 1});
    m["Ex1p2"] = one(4, {0, 1, 2});
    m["Ex1p3"] = one(4, {0, 1, 2, 3});
    m["Ex2p1"] = two({0, 1}, {1, 2});
    m["Ex2p2"] = two({0, 1, 2}, {1, 2, 3});
    m["Ex2p3"] = two({0, 1, 2, 3}, {0, 1, 2});
    m["Ex2p4"] = two({0, 1, 2, 3}, {0, 1, 2, 3});
    return m;
  }();
  return examples;
}

const LamaSpec& lama_example(std::string_view name) {
  const auto& all = lama_examples();
  auto it = all.find(std::string(name));
  if (it == all.end()) throw std::invalid_argument("unknown LamA example '" + std::string(name) + "'");
  return it->second;
}

LamaSpec lama_full_window(std::size_t num_timeslots, std::size_t num_cars, int energy) {
  std::vector<std::size_t> window(num_timeslots);
  std::iota(window.begin(), window.end(), std::size_t{0});
  LamaSpec spec{num_timeslots, num_cars, std::vector<std::vector<std::size_t>>(num_cars, window),
                std::vector<int>(num_cars, energy)};
  spec.validate();
  return spec;
}

// ---------------------------------------------------------------------------

std::string_view layout_name(CityLayout layout) {
  return layout == CityLayout::Symmetric ? "symmetric" : "asymmetric";
}

CityLayout layout_from_name(std::string_view name) {
  if (name == "symmetric") return CityLayout::Symmetric;
  if (name == "asymmetric") return CityLayout::Asymmetric;
  throw std::invalid_argument("unknown city layout '" + std::string(name) + "'");
}

void TrpSpec::validate() const {
  if (distances.rows() != distances.cols()) throw std::invalid_argument("distance matrix must be square");
  if (static_cast<std::size_t>(distances.rows()) != num_cities) {
    throw std::invalid_argument("distance matrix size does not match city count");
  }
  if (num_cities < 3) throw std::invalid_argument("routing needs at least three cities");
  if (num_cities * num_cities > kMaxBits) throw std::invalid_argument("routing limited to 8 cities (64 variables)");
  if ((distances.array() < 0.0).any()) throw std::invalid_argument("distances must be nonnegative");
  if (rho < 0.0) throw std::invalid_argument("penalty rho must be nonnegative");
}

QuboProblem trp_distance_part(const TrpSpec& spec) {
  spec.validate();
  const std::size_t m = spec.num_cities;
  const double dmax = spec.distances.maxCoeff();
  const double scale = dmax > 0.0 ? 1.0 / dmax : 1.0;
  QuboProblem q{Matrix::Zero(static_cast<Eigen::Index>(m * m), static_cast<Eigen::Index>(m * m)), 0.0};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const double d = scale * spec.distances(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      for (std::size_t t = 0; t < m; ++t) add_upper(q.Q, spec.var(i, t), spec.var(j, (t + 1) % m), d);
    }
  }
  return q;
}

QuboProblem trp_constraint_part(const TrpSpec& spec) {
  spec.validate();
  const std::size_t m = spec.num_cities;
  const double rho = spec.rho;
  QuboProblem q{Matrix::Zero(static_cast<Eigen::Index>(m * m), static_cast<Eigen::Index>(m * m)), 0.0};
  // (1 - sum_k b_k)^2 = 1 - sum_k b_k + 2 sum_{k<l} b_k b_l for binary b
  q.constant = 2.0 * static_cast<double>(m) * rho;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t t = 0; t < m; ++t) {
      add_upper(q.Q, spec.var(i, t), spec.var(i, t), -2.0 * rho);
      for (std::size_t u = t + 1; u < m; ++u) add_upper(q.Q, spec.var(i, t), spec.var(i, u), 2.0 * rho);
      for (std::size_t j = i + 1; j < m; ++j) add_upper(q.Q, spec.var(i, t), spec.var(j, t), 2.0 * rho);
    }
  }
  return q;
}

QuboProblem build_trp(const TrpSpec& spec) {
  QuboProblem q = trp_distance_part(spec);
  const QuboProblem c = trp_constraint_part(spec);
  q.Q += c.Q;
  q.constant += c.constant;
  return q;
}

DecodedRoute decode_trp(Bits b, const TrpSpec& spec) {
  spec.validate();
  const std::size_t m = spec.num_cities;
  DecodedRoute out;
  std::vector<int> per_city(m, 0);
  std::vector<std::size_t> order(m, 0);
  bool feasible = true;
  for (std::size_t t = 0; t < m && feasible; ++t) {
    int count = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (test_bit(b, spec.var(i, t))) {
        ++count;
        ++per_city[i];
        order[t] = i;
      }
    }
    feasible = count == 1;
  }
  if (feasible) feasible = std::all_of(per_city.begin(), per_city.end(), [](int k) { return k == 1; });
  out.feasible = feasible;
  if (feasible) {
    out.route.order = std::move(order);
    out.distance = tour_length(out.route, spec.distances);
  }
  return out;
}

DecodedRoute decode_trp(std::string_view bits, const TrpSpec& spec) {
  return decode_trp(bits_checked(bits, spec.num_vars()), spec);
}

Bits encode_route(const Route& route, const TrpSpec& spec) {
  if (route.order.size() != spec.num_cities) throw std::invalid_argument("route length does not match city count");
  Bits b = 0;
  for (std::size_t t = 0; t < route.order.size(); ++t) b |= Bits{1} << spec.var(route.order[t], t);
  return b;
}

double tour_length(const Route& route, const Matrix& distances) {
  const std::size_t m = route.order.size();
  double total = 0.0;
  for (std::size_t t = 0; t < m; ++t) {
    total += distances(static_cast<Eigen::Index>(route.order[t]), static_cast<Eigen::Index>(route.order[(t + 1) % m]));
  }
  return total;
}

Decoder trp_decoder(const TrpSpec& spec, const QuboProblem& qubo) {
  return [spec, qubo](Bits b) { return Decoded{decode_trp(b, spec).feasible, qubo.cost(b)}; };
}

TrpSpec gen_cities(std::size_t num_cities, CityLayout layout, std::uint64_t seed, double rho) {
  if (num_cities < 3) throw std::invalid_argument("routing needs at least three cities");
  TrpSpec spec;
  spec.num_cities = num_cities;
  spec.layout = layout;
  spec.rho = rho;
  spec.coordinates.resize(num_cities);
  if (layout == CityLayout::Symmetric) {
    for (std::size_t k = 0; k < num_cities; ++k) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(num_cities);
      spec.coordinates[k] = {std::cos(phi), std::sin(phi)};
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto& [x, y] : spec.coordinates) {
      x = u(rng);
      y = u(rng);
    }
  }
  const auto m = static_cast<Eigen::Index>(num_cities);
  spec.distances = Matrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (i == j) continue;
      if (layout == CityLayout::Symmetric) {
        // chord length 2 sin(pi |i-j| / m), exact for evenly spaced points
        const double k = static_cast<double>(std::abs(i - j));
        spec.distances(i, j) = 2.0 * std::sin(std::numbers::pi * k / static_cast<double>(m));
      } else {
        const auto [xi, yi] = spec.coordinates[static_cast<std::size_t>(i)];
        const auto [xj, yj] = spec.coordinates[static_cast<std::size_t>(j)];
        spec.distances(i, j) = std::hypot(xi - xj, yi - yj);
      }
    }
  }
  spec.validate();
  return spec;
}

RouteOracle trp_route_oracle(const TrpSpec& spec, const QuboProblem& qubo) {
  spec.validate();
  RouteOracle oracle;
  Route route;
  route.order.resize(spec.num_cities);
  std::iota(route.order.begin(), route.order.end(), std::size_t{0});
  bool first = true;
  do {
    ++oracle.routes_checked;
    const double cost = qubo.cost(encode_route(route, spec));
    const double tol = kOptimalityTol * std::max(1.0, std::abs(cost));
    if (first || cost < oracle.optimal_cost - tol) {
      oracle.optimal_cost = cost;
      oracle.optimal_distance = tour_length(route, spec.distances);
      oracle.optimal_routes.clear();
      oracle.optimal_routes.push_back(route);
      first = false;
    } else if (std::abs(cost - oracle.optimal_cost) <= tol) {
      oracle.optimal_routes.push_back(route);
    }
  } while (std::next_permutation(route.order.begin(), route.order.end()));
  return oracle;
}

// ---------------------------------------------------------------------------

double SpinModel::energy(Bits b) const {
  auto x = [b](std::size_t i) { return test_bit(b, i) ? 1.0 : -1.0; };
  double e = c;
  for (std::size_t i = 0; i < h.size(); ++i) e += h[i] * x(i);
  for (const auto& [ij, j] : J) e += j * x(ij.first) * x(ij.second);
  return e;
}

SpinModel ising_spin_form(const QuboProblem& qubo) {
  const std::size_t n = qubo.num_vars();
  SpinModel s;
  s.h.assign(n, 0.0);
  s.c = qubo.constant;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = qubo.Q(i, i);
    s.c += d / 2.0;
    s.h[i] += d / 2.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double q = qubo.Q(i, j) + qubo.Q(j, i);
      if (q == 0.0) continue;
      s.c += q / 4.0;
      s.h[i] += q / 4.0;
      s.h[j] += q / 4.0;
      s.J[{i, j}] += q / 4.0;
    }
  }
  return s;
}

}  // namespace qopt
