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

#ifndef FUZZYICA_TESTS_TEST_UTIL_H_
#define FUZZYICA_TESTS_TEST_UTIL_H_

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fuzzyica/model.h"

namespace fuzzyica::testing {

// Standard normal CDF by composite Simpson quadrature of the density, with no
// reference to erf/erfc. Absolute error well below 1e-12 for |x| <= 8.
inline double QuadratureNormalCdf(double x) {
  if (x == 0.0) return 0.5;
  const int intervals = 20000;
  const double h = x / intervals;
  auto pdf = [](double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi);
  };
  double sum = pdf(0.0) + pdf(x);
  for (int i = 1; i < intervals; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * pdf(i * h);
  }
  return 0.5 + sum * h / 3.0;
}

// Small random instance: n assets in [1, max_assets], integer bounds, budget
// at most the capacity.
inline PortfolioInstance RandomInstance(std::mt19937_64& rng, int max_assets) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int n = std::uniform_int_distribution<int>(1, max_assets)(rng);
  PortfolioInstance instance;
  double capacity = 0.0;
  for (int j = 0; j < n; ++j) {
    FuzzyRandomReturn r;
    r.r0 = 0.5 + 1.5 * u(rng);
    r.r1 = r.r0 + 0.3 * u(rng);
    r.r2 = 0.05 + 0.8 * u(rng);
    r.beta = 0.01 + 0.4 * u(rng);
    r.gamma = 0.01 + 0.4 * u(rng);
    instance.assets.push_back(r);
    const double bound = std::uniform_int_distribution<int>(1, 12)(rng);
    instance.upper_bounds.push_back(bound);
    capacity += bound;
  }
  instance.total_fund =
      std::uniform_int_distribution<int>(1, static_cast<int>(capacity))(rng);
  instance.target = {1.0 * instance.total_fund, 1.0 * instance.total_fund,
                     0.2 * instance.total_fund, 0.1 * instance.total_fund,
                     0.1 * instance.total_fund};
  return instance;
}

}  // namespace fuzzyica::testing

#endif  // FUZZYICA_TESTS_TEST_UTIL_H_
