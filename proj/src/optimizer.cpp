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

#include "qopt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qopt {

std::string_view termination_name(Termination t) {
  return t == Termination::MaxIter ? "max_iter" : "tolerance";
}

std::vector<double> OptTrace::best_so_far() const {
  std::vector<double> out;
  out.reserve(iterates.size());
  double best = 0.0;
  for (std::size_t i = 0; i < iterates.size(); ++i) {
    best = i == 0 ? iterates[i].cost : std::min(best, iterates[i].cost);
    out.push_back(best);
  }
  return out;
}

namespace {

class Evaluator {
 public:
  Evaluator(const Objective& f, OptTrace& trace, std::size_t budget) : f_(f), trace_(trace), budget_(budget) {}

  double operator()(const std::vector<double>& x) {
    const double v = f_(x);
    if (!std::isfinite(v)) {
      throw std::runtime_error("objective returned a non-finite value at call " +
                               std::to_string(trace_.iterates.size() + 1));
    }
    trace_.iterates.push_back({x, v});
    return v;
  }

  std::size_t used() const { return trace_.iterates.size(); }
  // One call is held back for the closing evaluation of the returned point.
  bool can_spend(std::size_t n) const { return used() + n + 1 <= budget_; }

 private:
  const Objective& f_;
  OptTrace& trace_;
  std::size_t budget_;
};

struct Vertex {
  std::vector<double> x;
  double f;
};

std::vector<double> affine(const std::vector<double>& centroid, const std::vector<double>& x, double t) {
  // centroid + t * (x - centroid)
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = centroid[i] + t * (x[i] - centroid[i]);
  return out;
}

double spread(const std::vector<Vertex>& simplex) {
  double s = 0.0;
  for (std::size_t v = 1; v < simplex.size(); ++v) {
    for (std::size_t i = 0; i < simplex[0].x.size(); ++i) {
      s = std::max(s, std::abs(simplex[v].x[i] - simplex[0].x[i]));
    }
  }
  return s;
}

}  // namespace

OptTrace minimize(const Objective& objective, std::vector<double> x0, const MinimizeOptions& options) {
  if (x0.empty()) throw std::invalid_argument("minimize needs at least one parameter");
  if (options.max_iter == 0) throw std::invalid_argument("max_iter must be positive");
  OptTrace trace;
  Evaluator eval(objective, trace, options.max_iter);
  const std::size_t n = x0.size();
  const double dn = static_cast<double>(n);
  // Standard coefficients for n <= 2, dimension-adapted above.
  const double da = std::max(dn, 2.0);
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / da;
  const double contract = 0.75 - 1.0 / (2.0 * da);
  const double shrink = 1.0 - 1.0 / da;

  std::vector<Vertex> simplex;
  simplex.push_back({x0, eval(x0)});
  bool exhausted = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!eval.can_spend(1)) {
      exhausted = true;
      break;
    }
    std::vector<double> x = x0;
    x[i] += options.initial_step;
    simplex.push_back({x, eval(x)});
  }

  auto order = [&] {
    std::stable_sort(simplex.begin(), simplex.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  };

  trace.termination = Termination::MaxIter;
  while (!exhausted) {
    order();
    if (spread(simplex) <= options.tol) {
      trace.termination = Termination::Tolerance;
      break;
    }
    if (!eval.can_spend(1)) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i] / dn;
    }
    Vertex& worst = simplex[n];
    const double f_best = simplex[0].f;
    const double f_second = simplex[n - 1].f;

    std::vector<double> xr = affine(centroid, worst.x, -reflect);
    const double fr = eval(xr);
    if (fr < f_best) {
      if (eval.can_spend(1)) {
        std::vector<double> xe = affine(centroid, worst.x, -reflect * expand);
        const double fe = eval(xe);
        worst = fe < fr ? Vertex{std::move(xe), fe} : Vertex{std::move(xr), fr};
      } else {
        worst = {std::move(xr), fr};
      }
      continue;
    }
    if (fr < f_second) {
      worst = {std::move(xr), fr};
      continue;
    }
    if (!eval.can_spend(1)) break;
    const bool outside = fr < worst.f;
    std::vector<double> xc = outside ? affine(centroid, worst.x, -reflect * contract) : affine(centroid, worst.x, contract);
    const double fc = eval(xc);
    if (fc < (outside ? fr : worst.f)) {
      worst = {std::move(xc), fc};
      continue;
    }
    for (std::size_t v = 1; v <= n; ++v) {
      if (!eval.can_spend(1)) {
        exhausted = true;
        break;
      }
      simplex[v].x = affine(simplex[0].x, simplex[v].x, shrink);
      simplex[v].f = eval(simplex[v].x);
    }
  }

  order();
  const Vertex& best = simplex[0];
  if (trace.iterates.back().params != best.x) eval(best.x);
  trace.final_params = trace.iterates.back().params;
  trace.final_cost = trace.iterates.back().cost;
  return trace;
}

StartSampler uniform_box(std::size_t dim, double lo, double hi) {
  return [=](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> x(dim);
    for (double& v : x) v = u(rng);
    return x;
  };
}

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

MultiStartReport multistart(const Objective& objective, std::size_t num_starts, const StartSampler& sampler,
                            std::uint64_t seed, const MinimizeOptions& options) {
  if (num_starts == 0) throw std::invalid_argument("multistart needs at least one start");
  MultiStartReport report;
  report.traces.reserve(num_starts);
  for (std::size_t k = 0; k < num_starts; ++k) {
    std::mt19937_64 rng = stream_rng(seed, k);
    report.traces.push_back(minimize(objective, sampler(rng), options));
  }
  for (std::size_t k = 0; k < num_starts; ++k) {
    if (k == 0 || report.traces[k].final_cost < report.best_cost) {
      report.best_cost = report.traces[k].final_cost;
      report.best_index = k;
    }
  }
  report.best_params = report.traces[report.best_index].final_params;
  return report;
}

}  // namespace qopt
