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

#include "qopt/io.hpp"

#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qopt {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != cols) throw std::invalid_argument("ragged matrix in JSON");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = row.at(static_cast<std::size_t>(k)).get<double>();
  }
  return m;
}

json vector_to_json(const Vector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Vector vector_from_json(const json& j) {
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

void to_json(json& j, const QcioProblem& p) {
  j = {{"dim_n", p.dim()},          {"M", matrix_to_json(p.M)}, {"l", vector_to_json(p.l)},
       {"c", p.c},                  {"A", matrix_to_json(p.A)}, {"r", vector_to_json(p.r)},
       {"lower", p.lower},          {"upper", p.upper}};
}

void from_json(const json& j, QcioProblem& p) {
  p.M = matrix_from_json(j.at("M"));
  p.l = vector_from_json(j.at("l"));
  p.c = j.at("c").get<double>();
  p.A = matrix_from_json(j.at("A"));
  p.r = vector_from_json(j.at("r"));
  p.lower = j.at("lower").get<std::vector<int>>();
  p.upper = j.at("upper").get<std::vector<int>>();
  if (j.contains("dim_n") && j["dim_n"].get<std::size_t>() != p.dim()) {
    throw std::invalid_argument("dim_n does not match M");
  }
  p.validate();
}

void to_json(json& j, const QuioProblem& p) {
  j = {{"M_rho", matrix_to_json(p.M_rho)}, {"l_rho", vector_to_json(p.l_rho)}, {"c_rho", p.c_rho}, {"rho", p.rho}};
}

void from_json(const json& j, QuioProblem& p) {
  p.M_rho = matrix_from_json(j.at("M_rho"));
  p.l_rho = vector_from_json(j.at("l_rho"));
  p.c_rho = j.at("c_rho").get<double>();
  p.rho = j.at("rho").get<double>();
}

void to_json(json& j, const BinaryEncoding& e) {
  j = {{"B", matrix_to_json(e.B)}, {"bits_per_var", e.bits_per_var}};
}

void from_json(const json& j, BinaryEncoding& e) {
  e.B = matrix_from_json(j.at("B"));
  e.bits_per_var = j.at("bits_per_var").get<std::vector<int>>();
}

void to_json(json& j, const QuboProblem& q) {
  j = {{"Q", matrix_to_json(q.Q)}, {"constant", q.constant}, {"num_vars", q.num_vars()}};
}

void from_json(const json& j, QuboProblem& q) {
  q.Q = matrix_from_json(j.at("Q"));
  q.constant = j.value("constant", 0.0);
  if (q.Q.rows() != q.Q.cols()) throw std::invalid_argument("QUBO matrix must be square");
  if (j.contains("num_vars") && j["num_vars"].get<std::size_t>() != q.num_vars()) {
    throw std::invalid_argument("num_vars does not match Q");
  }
  q.Q = upper_triangularize(q.Q);
}

void to_json(json& j, const IsingModel& m) {
  json quad = json::array();
  for (const auto& [ij, h] : m.h_quad) quad.push_back({{"i", ij.first}, {"j", ij.second}, {"value", h}});
  j = {{"h_quad", quad}, {"h_lin", m.h_lin}, {"h_const", m.h_const}, {"num_qubits", m.num_qubits}};
}

void from_json(const json& j, IsingModel& m) {
  m.num_qubits = j.at("num_qubits").get<std::size_t>();
  m.h_lin = j.at("h_lin").get<std::vector<double>>();
  m.h_const = j.at("h_const").get<double>();
  m.h_quad.clear();
  for (const json& e : j.at("h_quad")) {
    auto i = e.at("i").get<std::size_t>();
    auto k = e.at("j").get<std::size_t>();
    if (i >= k || k >= m.num_qubits) throw std::invalid_argument("h_quad keys must satisfy i < j < num_qubits");
    m.h_quad[{i, k}] = e.at("value").get<double>();
  }
  if (m.h_lin.size() != m.num_qubits) throw std::invalid_argument("h_lin needs one entry per qubit");
}

json solve_report_to_json(const SolveReport& r, std::size_t num_bits) {
  json set = json::array();
  for (Bits b : r.optimal_set) set.push_back(bits_to_string(b, num_bits));
  return {{"schema_version", kSchemaVersion},
          {"optimal_cost", r.optimal_cost},
          {"optimal_set", set},
          {"evaluations", r.evaluations}};
}

void to_json(json& j, const LamaSpec& s) {
  j = {{"num_timeslots", s.num_timeslots},
       {"num_cars", s.num_cars},
       {"availability", s.availability},
       {"required_energy", s.required_energy},
       {"num_levels", s.num_levels}};
}

void from_json(const json& j, LamaSpec& s) {
  s.num_timeslots = j.at("num_timeslots").get<std::size_t>();
  s.num_cars = j.at("num_cars").get<std::size_t>();
  s.availability = j.at("availability").get<std::vector<std::vector<std::size_t>>>();
  s.required_energy = j.at("required_energy").get<std::vector<int>>();
  s.num_levels = j.value("num_levels", 4);
  s.validate();
}

void to_json(json& j, const TrpSpec& s) {
  j = {{"num_cities", s.num_cities},
       {"distances", matrix_to_json(s.distances)},
       {"layout", std::string(layout_name(s.layout))},
       {"rho", s.rho}};
  if (!s.coordinates.empty()) {
    json pts = json::array();
    for (auto [x, y] : s.coordinates) pts.push_back({x, y});
    j["coordinates"] = pts;
  }
}

void from_json(const json& j, TrpSpec& s) {
  s.num_cities = j.at("num_cities").get<std::size_t>();
  s.distances = matrix_from_json(j.at("distances"));
  s.layout = layout_from_name(j.value("layout", std::string("asymmetric")));
  s.rho = j.value("rho", 1.0);
  s.coordinates.clear();
  if (j.contains("coordinates")) {
    for (const json& p : j["coordinates"]) s.coordinates.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  }
  s.validate();
}

void to_json(json& j, const SampleSet& s) {
  json counts = json::object();
  for (const auto& [b, n] : s.counts) counts[bits_to_string(b, s.num_bits)] = n;
  j = {{"counts", counts}, {"shots", s.shots}, {"num_bits", s.num_bits}};
}

void from_json(const json& j, SampleSet& s) {
  s = SampleSet{};
  for (const auto& [key, n] : j.at("counts").items()) {
    s.num_bits = key.size();
    s.add(bits_from_string(key), n.get<std::uint64_t>());
  }
  if (j.contains("num_bits")) s.num_bits = j["num_bits"].get<std::size_t>();
  if (j.contains("shots") && j["shots"].get<std::uint64_t>() != s.shots) {
    throw std::invalid_argument("counts do not sum to shots");
  }
}

void to_json(json& j, const Distribution& d) {
  json probs = json::object();
  for (const auto& [b, p] : d.probs) probs[bits_to_string(b, d.num_bits)] = p;
  j = {{"probs", probs}, {"num_bits", d.num_bits}};
}

void from_json(const json& j, Distribution& d) {
  d = Distribution{};
  // Accepts either {"probs": ...} or a sample-set style {"counts": ...}.
  if (j.contains("counts")) {
    d = Distribution::from_samples(j.get<SampleSet>());
    return;
  }
  for (const auto& [key, p] : j.at("probs").items()) {
    d.num_bits = key.size();
    d.probs[bits_from_string(key)] += p.get<double>();
  }
  if (j.contains("num_bits")) d.num_bits = j["num_bits"].get<std::size_t>();
}

void to_json(json& j, const Gate& g) {
  j = {{"kind", std::string(gate_name(g.kind))}, {"qubits", g.qubits}, {"angle", g.angle}};
  if (g.param) j["param"] = {{"index", g.param->index}, {"scale", g.param->scale}};
}

void from_json(const json& j, Gate& g) {
  g.kind = gate_kind_from_name(j.at("kind").get<std::string>());
  g.qubits = j.at("qubits").get<std::vector<std::size_t>>();
  g.angle = j.value("angle", 0.0);
  g.param.reset();
  if (j.contains("param")) g.param = ParamRef{j["param"].at("index").get<std::size_t>(), j["param"].value("scale", 1.0)};
}

void to_json(json& j, const Circuit& c) {
  j = {{"schema_version", kSchemaVersion}, {"num_qubits", c.num_qubits()}, {"gates", c.gates()}};
}

void from_json(const json& j, Circuit& c) {
  c = Circuit(j.at("num_qubits").get<std::size_t>());
  for (const json& g : j.at("gates")) c.add(g.get<Gate>());
}

void to_json(json& j, const CouplingMap& c) {
  json edges = json::array();
  for (auto [a, b] : c.edges()) edges.push_back({a, b});
  j = {{"schema_version", kSchemaVersion}, {"num_qubits", c.num_qubits()}, {"edges", edges}};
}

void from_json(const json& j, CouplingMap& c) {
  std::vector<Edge> edges;
  for (const json& e : j.at("edges")) edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  c = CouplingMap(j.at("num_qubits").get<std::size_t>(), std::move(edges));
}

void to_json(json& j, const ErrorMap& e) {
  json two = json::array();
  for (const auto& [edge, rate] : e.two_qubit) two.push_back({{"qubits", {edge.first, edge.second}}, {"error", rate}});
  j = {{"schema_version", kSchemaVersion},
       {"single_qubit", e.single_qubit},
       {"two_qubit", two},
       {"measurement", e.measurement}};
}

void from_json(const json& j, ErrorMap& e) {
  e = ErrorMap{};
  e.single_qubit = j.at("single_qubit").get<std::vector<double>>();
  e.measurement = j.at("measurement").get<std::vector<double>>();
  for (const json& t : j.at("two_qubit")) {
    const auto a = t.at("qubits").at(0).get<std::size_t>();
    const auto b = t.at("qubits").at(1).get<std::size_t>();
    e.two_qubit[{std::min(a, b), std::max(a, b)}] = t.at("error").get<double>();
  }
  e.validate();
}

void to_json(json& j, const RelativeError& r) {
  j = {{"value", r.value}, {"absolute_fallback", r.absolute_fallback}};
}

void to_json(json& j, const QualityReport& r) {
  j = {{"schema_version", kSchemaVersion},
       {"fidelity", r.fidelity},
       {"relative_error", r.relative_error},
       {"random_baseline", r.random_baseline},
       {"feasible_pct", r.rates.feasible_pct},
       {"optimal_pct", r.rates.optimal_pct}};
}

void to_json(json& j, const OptTrace& t) {
  json costs = json::array();
  for (const Iterate& it : t.iterates) costs.push_back(it.cost);
  j = {{"costs", costs},
       {"final_cost", t.final_cost},
       {"final_params", t.final_params},
       {"termination", std::string(termination_name(t.termination))}};
}

void to_json(json& j, const SweepRow& r) {
  j = {{"axis", r.axis_value}, {"feasible_pct", r.feasible_pct}, {"optimal_pct", r.optimal_pct}, {"reads", r.reads}};
}

void write_landscape_csv(std::ostream& os, const Landscape& land) {
  os << std::setprecision(17);
  os << "# schema_version=" << kSchemaVersion << " rows=beta cols=gamma\n";
  os << "beta\\gamma";
  for (double g : land.gamma_axis) os << ',' << g;
  os << '\n';
  for (std::size_t i = 0; i < land.beta_axis.size(); ++i) {
    os << land.beta_axis[i];
    for (double v : land.grid[i]) os << ',' << v;
    os << '\n';
  }
}

void write_traces_csv(std::ostream& os, std::span<const OptTrace> traces) {
  os << std::setprecision(17);
  os << "# schema_version=" << kSchemaVersion << '\n' << "run,iteration,cost\n";
  for (std::size_t r = 0; r < traces.size(); ++r) {
    for (std::size_t k = 0; k < traces[r].iterates.size(); ++k) {
      os << r << ',' << k << ',' << traces[r].iterates[k].cost << '\n';
    }
  }
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
  os << std::setprecision(17);
  os << "# schema_version=" << kSchemaVersion << '\n' << "axis,feasible_pct,optimal_pct,reads\n";
  for (const SweepRow& r : rows) {
    os << r.axis_value << ',' << r.feasible_pct << ',' << r.optimal_pct << ',' << r.reads << '\n';
  }
}

void write_schedule_csv(std::ostream& os, const Schedule& schedule) {
  os << "# schema_version=" << kSchemaVersion << '\n' << "car";
  const std::size_t T = schedule.levels.empty() ? 0 : schedule.levels.front().size();
  for (std::size_t t = 0; t < T; ++t) os << ",slot" << t;
  os << '\n';
  for (std::size_t c = 0; c < schedule.levels.size(); ++c) {
    os << c;
    for (int level : schedule.levels[c]) os << ',' << level;
    os << '\n';
  }
}

void write_route_csv(std::ostream& os, const Route& route, const TrpSpec& spec) {
  os << std::setprecision(17);
  os << "# schema_version=" << kSchemaVersion << '\n' << "time,city,x,y\n";
  for (std::size_t t = 0; t < route.order.size(); ++t) {
    const std::size_t city = route.order[t];
    os << t << ',' << city;
    if (city < spec.coordinates.size()) {
      os << ',' << spec.coordinates[city].first << ',' << spec.coordinates[city].second;
    } else {
      os << ",,";
    }
    os << '\n';
  }
}

}  // namespace qopt
