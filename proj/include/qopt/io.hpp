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

#include <iosfwd>
#include <span>
#include <vector>

#include <json.hpp>

#include "qopt/annealer.hpp"
#include "qopt/circuit.hpp"
#include "qopt/model.hpp"
#include "qopt/optimizer.hpp"
#include "qopt/quality.hpp"
#include "qopt/simulator.hpp"
#include "qopt/transpiler.hpp"
#include "qopt/usecases.hpp"
#include "qopt/variational.hpp"

namespace qopt {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);

// Field names follow the type definitions; matrices are row-major nested
// arrays and bitstrings are written qubit 1 first.
void to_json(json& j, const QcioProblem& p);
void from_json(const json& j, QcioProblem& p);
void to_json(json& j, const QuioProblem& p);
void from_json(const json& j, QuioProblem& p);
void to_json(json& j, const BinaryEncoding& e);
void from_json(const json& j, BinaryEncoding& e);
void to_json(json& j, const QuboProblem& q);
void from_json(const json& j, QuboProblem& q);
void to_json(json& j, const IsingModel& m);
void from_json(const json& j, IsingModel& m);
json solve_report_to_json(const SolveReport& r, std::size_t num_bits);

void to_json(json& j, const LamaSpec& s);
void from_json(const json& j, LamaSpec& s);
void to_json(json& j, const TrpSpec& s);
void from_json(const json& j, TrpSpec& s);

void to_json(json& j, const SampleSet& s);
void from_json(const json& j, SampleSet& s);
void to_json(json& j, const Distribution& d);
void from_json(const json& j, Distribution& d);

void to_json(json& j, const Gate& g);
void from_json(const json& j, Gate& g);
void to_json(json& j, const Circuit& c);
void from_json(const json& j, Circuit& c);
void to_json(json& j, const CouplingMap& c);
void from_json(const json& j, CouplingMap& c);
void to_json(json& j, const ErrorMap& e);
void from_json(const json& j, ErrorMap& e);

void to_json(json& j, const RelativeError& r);
void to_json(json& j, const QualityReport& r);
void to_json(json& j, const OptTrace& t);
void to_json(json& j, const SweepRow& r);

// CSV exports
void write_landscape_csv(std::ostream& os, const Landscape& land);
void write_traces_csv(std::ostream& os, std::span<const OptTrace> traces);
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);
void write_schedule_csv(std::ostream& os, const Schedule& schedule);
void write_route_csv(std::ostream& os, const Route& route, const TrpSpec& spec);

}  // namespace qopt
