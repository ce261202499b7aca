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

#include "fuzzyica/penalty.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fuzzyica/errors.h"

namespace fuzzyica {
namespace {

double PowerOf(double v, double exponent) {
  return exponent == 2.0 ? v * v : std::pow(v, exponent);
}

}  // namespace

void PenaltyConfig::Validate() const {
  if (!(eq_factor > 0.0) || !(ineq_factor > 0.0)) {
    throw ValidationError("penalty factors must be positive");
  }
  for (double e : {eq_exponent, ineq_exponent}) {
    if (e != 1.0 && e != 2.0) {
      throw ValidationError("penalty exponents must be 1 or 2");
    }
  }
}

double PenalizedObjective(const DeterministicLP& lp, std::span<const double> x,
                          const PenaltyConfig& cfg) {
  const double value = Objective(lp, x);
  const double budget_gap =
      std::abs(std::accumulate(x.begin(), x.end(), 0.0) - lp.total_fund);
  double penalty = cfg.eq_factor * PowerOf(budget_gap, cfg.eq_exponent);
  if (cfg.enforce_threshold) {
    const double shortfall = std::max(0.0, lp.threshold - value);
    penalty += cfg.ineq_factor * PowerOf(shortfall, cfg.ineq_exponent);
  }
  return value - penalty;
}

std::vector<double> Repair(std::span<const double> x, double total,
                           std::span<const double> upper) {
  if (x.size() != upper.size()) {
    throw std::invalid_argument("Repair: position and bounds differ in length");
  }
  const double capacity = std::accumulate(upper.begin(), upper.end(), 0.0);
  if (capacity < total) {
    throw InfeasibleError("Repair: sum of upper bounds " +
                          std::to_string(capacity) + " is below the budget " +
                          std::to_string(total));
  }
  const std::size_t n = x.size();
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = std::clamp(x[j], 0.0, upper[j]);

  const double tol = 1e-12 * std::max(total, 1.0);
  auto residual = [&] {
    return std::accumulate(out.begin(), out.end(), 0.0) - total;
  };
  double gap = residual();
  if (std::abs(gap) <= tol) return out;

  if (gap < 0.0) {
    double headroom = 0.0;
    for (std::size_t j = 0; j < n; ++j) headroom += upper[j] - out[j];
    const double share = std::min(1.0, -gap / headroom);
    for (std::size_t j = 0; j < n; ++j) {
      out[j] = std::min(upper[j], out[j] + share * (upper[j] - out[j]));
    }
  } else {
    double mass = 0.0;
    for (double v : out) mass += v;
    const double share = std::min(1.0, gap / mass);
    for (std::size_t j = 0; j < n; ++j) {
      out[j] = std::max(0.0, out[j] - share * out[j]);
    }
  }

  // Rounding leaves a residual of a few ulps; park it on the coordinate with
  // the most room in the needed direction.
  for (int pass = 0; pass < 4; ++pass) {
    gap = residual();
    if (std::abs(gap) <= tol) break;
    std::size_t best = 0;
    double best_room = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double room = gap < 0.0 ? upper[j] - out[j] : out[j];
      if (room > best_room) {
        best_room = room;
        best = j;
      }
    }
    out[best] = std::clamp(out[best] - gap, 0.0, upper[best]);
  }
  return out;
}

}  // namespace fuzzyica
