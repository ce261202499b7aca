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

#ifndef FUZZYICA_MODEL_H_
#define FUZZYICA_MODEL_H_

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "fuzzyica/fuzzy_number.h"
#include "fuzzyica/normal.h"

namespace fuzzyica {

// Portfolio selection with fuzzy random returns:
//
//   max  Z(x) = sum_j R_j x_j
//   s.t. sum_j x_j = total_fund
//        sum_j R_j x_j >= R_0          (fuzzy, necessity-qualified)
//        0 <= x_j <= upper_bounds[j]
//
// where every R_j (and the target R_0) is a FuzzyRandomReturn driven by the
// common normal factor `factor`.
struct PortfolioInstance {
  std::vector<FuzzyRandomReturn> assets;
  FuzzyRandomReturn target;
  double total_fund = 0.0;
  std::vector<double> upper_bounds;
  RandomFactor factor;
  // Shoulder shape of every return, both sides.
  ReferenceFunction shape;

  std::size_t num_assets() const { return assets.size(); }

  // Throws ValidationError on a malformed field and InfeasibleError when
  // sum(upper_bounds) < total_fund.
  void Validate() const;

  friend bool operator==(const PortfolioInstance&,
                         const PortfolioInstance&) = default;
};

// lambda: probability level. eta: necessity level. Both in (0, 1).
struct ConfidenceLevels {
  double lambda = 0.5;
  double eta = 0.5;

  // Throws ValidationError.
  void Validate() const;

  friend bool operator==(const ConfidenceLevels&,
                         const ConfidenceLevels&) = default;
};

// The crisp equivalent:
//
//   max  c . x
//   s.t. sum_j x_j = total_fund, 0 <= x_j <= upper_bounds[j]
//        c . x >= threshold
//
// The return constraint has the objective as its left side, so a single
// optimal value decides it.
struct DeterministicLP {
  std::vector<double> coefficients;
  double total_fund = 0.0;
  std::vector<double> upper_bounds;
  double threshold = 0.0;
  ConfidenceLevels levels;

  std::size_t size() const { return coefficients.size(); }
};

// c_j = R0_j + T*(1 - lambda) R2_j - L*(1 - eta) beta_j and
// threshold = R0_0 + T*(1 - lambda) R2_0 - beta_0 L*(1 - eta), with T* the
// quantile of the factor and L* the pseudo-inverse of the instance shape.
DeterministicLP Reformulate(const PortfolioInstance& instance,
                            const ConfidenceLevels& levels);

// c . x. Throws std::invalid_argument on a length mismatch.
double Objective(const DeterministicLP& lp, std::span<const double> x);

struct FeasibilityTolerances {
  double budget = 1e-6;
  double threshold = 1e-9;
  double box = 1e-9;
};

struct ResidualReport {
  // sum(x) - total_fund.
  double budget_residual = 0.0;
  // c . x - threshold; nonnegative when the return constraint holds.
  double threshold_residual = 0.0;
  // Per asset: max(x_j - U_j, -x_j, 0).
  std::vector<double> bound_violations;
  bool budget_ok = false;
  bool threshold_ok = false;
  bool bounds_ok = false;
  bool feasible = false;
};

// Throws std::invalid_argument on a length mismatch.
ResidualReport Residuals(const DeterministicLP& lp, std::span<const double> x,
                         const FeasibilityTolerances& tolerances = {});

struct CertificateResult {
  double probability = 0.0;
  // Binomial standard error of `probability`.
  double std_error = 0.0;
  std::size_t samples = 0;
  double lambda = 0.0;
  bool meets_level = false;
};

// Monte Carlo estimate of Pr{ N(Z(t) >= f) >= eta } over factor draws t,
// where Z(t) = sum_j x_j R_j(t). Evaluated directly from the fuzzy
// definitions (Observe, WeightedSum, NecessityGeqScalar), independent of
// Reformulate. `meets_level` is probability >= lambda.
//
// Requires samples >= 1000; throws std::invalid_argument otherwise.
CertificateResult NecessityCertificate(const PortfolioInstance& instance,
                                       const ConfidenceLevels& levels,
                                       std::span<const double> x, double f,
                                       std::size_t samples,
                                       std::mt19937_64& rng);

}  // namespace fuzzyica

#endif  // FUZZYICA_MODEL_H_
