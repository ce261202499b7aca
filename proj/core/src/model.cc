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

#include "fuzzyica/model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fuzzyica/errors.h"
#include "fuzzyica/necessity.h"

namespace fuzzyica {
namespace {

void CheckLength(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(expected) + " entries, got " +
                                std::to_string(got));
  }
}

}  // namespace

void PortfolioInstance::Validate() const {
  if (assets.empty()) throw ValidationError("instance has no assets");
  for (std::size_t j = 0; j < assets.size(); ++j) {
    try {
      assets[j].Validate();
    } catch (const ValidationError& e) {
      throw ValidationError("asset " + std::to_string(j + 1) + ": " + e.what());
    }
  }
  try {
    target.Validate();
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("target: ") + e.what());
  }
  if (!(total_fund > 0.0) || !std::isfinite(total_fund)) {
    throw ValidationError("total_fund must be positive");
  }
  if (upper_bounds.size() != assets.size()) {
    throw ValidationError("upper_bounds has " +
                          std::to_string(upper_bounds.size()) +
                          " entries for " + std::to_string(assets.size()) +
                          " assets");
  }
  for (std::size_t j = 0; j < upper_bounds.size(); ++j) {
    if (!(upper_bounds[j] > 0.0) || !std::isfinite(upper_bounds[j])) {
      throw ValidationError("upper_bounds[" + std::to_string(j) +
                            "] must be positive");
    }
  }
  factor.Validate();
  const double capacity =
      std::accumulate(upper_bounds.begin(), upper_bounds.end(), 0.0);
  if (capacity < total_fund) {
    throw InfeasibleError("total_fund " + std::to_string(total_fund) +
                          " exceeds the sum of upper_bounds " +
                          std::to_string(capacity));
  }
}

void ConfidenceLevels::Validate() const {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw ValidationError("lambda must lie in (0, 1), got " +
                          std::to_string(lambda));
  }
  if (!(eta > 0.0 && eta < 1.0)) {
    throw ValidationError("eta must lie in (0, 1), got " + std::to_string(eta));
  }
}

DeterministicLP Reformulate(const PortfolioInstance& instance,
                            const ConfidenceLevels& levels) {
  levels.Validate();
  const double t_star = instance.factor.Quantile(1.0 - levels.lambda);
  const double l_star = instance.shape.PseudoInverse(1.0 - levels.eta);

  DeterministicLP lp;
  lp.coefficients.reserve(instance.assets.size());
  for (const FuzzyRandomReturn& r : instance.assets) {
    lp.coefficients.push_back(r.r0 + t_star * r.r2 - l_star * r.beta);
  }
  const FuzzyRandomReturn& target = instance.target;
  lp.threshold = target.r0 + t_star * target.r2 - target.beta * l_star;
  lp.total_fund = instance.total_fund;
  lp.upper_bounds = instance.upper_bounds;
  lp.levels = levels;
  return lp;
}

double Objective(const DeterministicLP& lp, std::span<const double> x) {
  CheckLength(lp.size(), x.size(), "Objective");
  double sum = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) sum += lp.coefficients[j] * x[j];
  return sum;
}

ResidualReport Residuals(const DeterministicLP& lp, std::span<const double> x,
                         const FeasibilityTolerances& tolerances) {
  CheckLength(lp.size(), x.size(), "Residuals");
  ResidualReport report;
  report.budget_residual =
      std::accumulate(x.begin(), x.end(), 0.0) - lp.total_fund;
  report.threshold_residual = Objective(lp, x) - lp.threshold;
  report.bound_violations.resize(x.size());
  report.bounds_ok = true;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double v =
        std::max({x[j] - lp.upper_bounds[j], -x[j], 0.0});
    report.bound_violations[j] = v;
    if (v > tolerances.box) report.bounds_ok = false;
  }
  report.budget_ok = std::abs(report.budget_residual) <= tolerances.budget;
  report.threshold_ok = report.threshold_residual >= -tolerances.threshold;
  report.feasible = report.budget_ok && report.threshold_ok && report.bounds_ok;
  return report;
}

CertificateResult NecessityCertificate(const PortfolioInstance& instance,
                                       const ConfidenceLevels& levels,
                                       std::span<const double> x, double f,
                                       std::size_t samples,
                                       std::mt19937_64& rng) {
  CheckLength(instance.assets.size(), x.size(), "NecessityCertificate");
  if (samples < 1000) {
    throw std::invalid_argument("NecessityCertificate needs >= 1000 samples");
  }
  std::normal_distribution<double> draw(instance.factor.mean,
                                        instance.factor.std_dev);
  std::vector<LRFuzzyNumber> observed;
  observed.reserve(x.size());
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const double t = draw(rng);
    observed.clear();
    for (const FuzzyRandomReturn& r : instance.assets) {
      observed.push_back(r.Observe(t, instance.shape));
    }
    const LRFuzzyNumber z = WeightedSum(observed, x);
    if (NecessityGeqScalar(z, f) >= levels.eta) ++hits;
  }
  CertificateResult result;
  result.samples = samples;
  result.lambda = levels.lambda;
  result.probability = static_cast<double>(hits) / samples;
  result.std_error = std::sqrt(result.probability *
                               (1.0 - result.probability) / samples);
  result.meets_level = result.probability >= levels.lambda;
  return result;
}

}  // namespace fuzzyica
