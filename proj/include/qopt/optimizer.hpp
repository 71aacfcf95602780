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
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace qopt {

using Objective = std::function<double(std::span<const double>)>;

enum class Termination { MaxIter, Tolerance };

std::string_view termination_name(Termination t);

struct Iterate {
  std::vector<double> params;
  double cost = 0.0;
};

/// Every objective call in order. The last entry is the returned point.
struct OptTrace {
  std::vector<Iterate> iterates;
  std::vector<double> final_params;
  double final_cost = 0.0;
  Termination termination = Termination::MaxIter;

  std::vector<double> best_so_far() const;
};

struct MinimizeOptions {
  /// Budget of objective calls, including the initial simplex.
  std::size_t max_iter = 1000;
  /// Stop once every simplex vertex lies within tol of the best (max-norm).
  double tol = 1e-6;
  double initial_step = 1.0;
};

/// Derivative-free local minimization (Nelder-Mead with dimension-adaptive
/// coefficients). Throws std::runtime_error if the objective returns a
/// non-finite value.
OptTrace minimize(const Objective& objective, std::vector<double> x0, const MinimizeOptions& options = {});

using StartSampler = std::function<std::vector<double>(std::mt19937_64&)>;

/// Independent coordinates uniform in [lo, hi).
StartSampler uniform_box(std::size_t dim, double lo, double hi);

struct MultiStartReport {
  std::vector<OptTrace> traces;
  std::vector<double> best_params;
  double best_cost = 0.0;
  std::size_t best_index = 0;
};

/// Runs `num_starts` local minimizations. Start k draws from an RNG seeded
/// with (seed, k), so results do not depend on execution order.
MultiStartReport multistart(const Objective& objective, std::size_t num_starts, const StartSampler& sampler,
                            std::uint64_t seed, const MinimizeOptions& options = {});

/// Per-item RNG stream derived from (seed, index).
std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t index);

}  // namespace qopt
