// Copyright 2026 The fuzzyica Authors
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

#include "fuzzyica/lp_oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fuzzyica {
namespace {

constexpr std::int64_t kMaxBruteForceNodes = 100'000'000;

void FinishSolution(const DeterministicLP& lp, ExactSolution& solution) {
  solution.objective = Objective(lp, solution.x);
  solution.threshold_satisfied = solution.objective >= lp.threshold;
  solution.status = solution.threshold_satisfied
                        ? SolveStatus::kOptimal
                        : SolveStatus::kThresholdInfeasible;
}

std::int64_t LatticeUnits(double value, double step, const char* what) {
  const double units = value / step;
  const double rounded = std::round(units);
  if (std::abs(units - rounded) > 1e-9 * std::max(1.0, std::abs(units))) {
    throw std::invalid_argument(std::string("BruteForce: grid step does not "
                                            "divide ") + what);
  }
  return static_cast<std::int64_t>(rounded);
}

class LatticeSearch {
 public:
  LatticeSearch(const DeterministicLP& lp, double step,
                std::vector<std::int64_t> caps)
      : lp_(lp), step_(step), caps_(std::move(caps)),
        current_(caps_.size(), 0), suffix_cap_(caps_.size() + 1, 0) {
    for (std::size_t j = caps_.size(); j-- > 0;) {
      suffix_cap_[j] = suffix_cap_[j + 1] + caps_[j];
    }
  }

  bool found() const { return found_; }
  const std::vector<std::int64_t>& best() const { return best_; }

  void Run(std::int64_t budget) { Visit(0, budget, 0.0); }

 private:
  void Visit(std::size_t j, std::int64_t remaining, double value) {
    if (++nodes_ > kMaxBruteForceNodes) {
      throw std::runtime_error("BruteForce: enumeration exceeded 1e8 nodes");
    }
    if (j == caps_.size()) {
      if (remaining == 0 && (!found_ || value > best_value_)) {
        found_ = true;
        best_value_ = value;
        best_ = current_;
      }
      return;
    }
    if (remaining > suffix_cap_[j]) return;
    const std::int64_t lo = std::max<std::int64_t>(0, remaining - suffix_cap_[j + 1]);
    const std::int64_t hi = std::min(caps_[j], remaining);
    for (std::int64_t k = hi; k >= lo; --k) {
      current_[j] = k;
      Visit(j + 1, remaining - k,
            value + lp_.coefficients[j] * static_cast<double>(k) * step_);
    }
    current_[j] = 0;
  }

  const DeterministicLP& lp_;
  double step_;
  std::vector<std::int64_t> caps_;
  std::vector<std::int64_t> current_;
  std::vector<std::int64_t> suffix_cap_;
  std::vector<std::int64_t> best_;
  double best_value_ = 0.0;
  bool found_ = false;
  std::int64_t nodes_ = 0;
};

}  // namespace

const char* ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kBudgetInfeasible:
      return "budget_infeasible";
    case SolveStatus::kThresholdInfeasible:
      return "threshold_infeasible";
  }
  return "unknown";
}

ExactSolution SolveExact(const DeterministicLP& lp) {
  const std::size_t n = lp.size();
  if (lp.upper_bounds.size() != n) {
    throw std::invalid_argument("SolveExact: bounds and coefficients differ "
                                "in length");
  }
  ExactSolution solution;
  const double capacity =
      std::accumulate(lp.upper_bounds.begin(), lp.upper_bounds.end(), 0.0);
  if (capacity < lp.total_fund) {
    solution.status = SolveStatus::kBudgetInfeasible;
    return solution;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return lp.coefficients[a] > lp.coefficients[b];
                   });

  solution.x.assign(n, 0.0);
  double remaining = lp.total_fund;
  for (std::size_t j : order) {
    if (remaining <= 0.0) break;
    const double take = std::min(lp.upper_bounds[j], remaining);
    solution.x[j] = take;
    remaining -= take;
  }
  FinishSolution(lp, solution);
  return solution;
}

ExactSolution BruteForce(const DeterministicLP& lp, double grid_step) {
  const std::size_t n = lp.size();
  if (n == 0 || n > 6) {
    throw std::invalid_argument("BruteForce: supports 1 to 6 assets");
  }
  if (lp.upper_bounds.size() != n) {
    throw std::invalid_argument("BruteForce: bounds and coefficients differ "
                                "in length");
  }
  if (!(grid_step > 0.0)) {
    throw std::invalid_argument("BruteForce: grid step must be positive");
  }
  const std::int64_t budget = LatticeUnits(lp.total_fund, grid_step, "the budget");
  std::vector<std::int64_t> caps(n);
  for (std::size_t j = 0; j < n; ++j) {
    caps[j] = LatticeUnits(lp.upper_bounds[j], grid_step, "an upper bound");
  }

  LatticeSearch search(lp, grid_step, std::move(caps));
  search.Run(budget);

  ExactSolution solution;
  if (!search.found()) {
    solution.status = SolveStatus::kBudgetInfeasible;
    return solution;
  }
  solution.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    solution.x[j] = static_cast<double>(search.best()[j]) * grid_step;
  }
  FinishSolution(lp, solution);
  return solution;
}

}  // namespace fuzzyica
