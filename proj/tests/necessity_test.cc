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

#include "fuzzyica/necessity.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"

namespace fuzzyica {
namespace {

TEST(NecessityGeqScalarTest, Examples) {
  const LRFuzzyNumber a(10, 12, 2, 2);
  EXPECT_EQ(NecessityGeqScalar(a, 8), 1.0);
  EXPECT_NEAR(NecessityGeqScalar(a, 9), 0.5, 1e-15);
  EXPECT_EQ(NecessityGeqScalar(a, 11), 0.0);
  EXPECT_EQ(NecessityGeqScalar(a, 10), 0.0);
  EXPECT_EQ(NecessityGeqScalar(a, -100), 1.0);
}

TEST(NecessityGeqScalarTest, ThresholdFormAgreesWithDegree) {
  // N(a >= f) >= eta  <=>  f <= a0 - beta * L*(1 - eta).
  const LRFuzzyNumber a(10, 12, 2, 2);
  for (double eta : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const double edge = a.a0() - a.beta() * a.left().PseudoInverse(1.0 - eta);
    EXPECT_GE(NecessityGeqScalar(a, edge - 1e-9), eta);
    EXPECT_LT(NecessityGeqScalar(a, edge + 1e-9), eta);
  }
}

TEST(NecessityGeqFuzzyTest, Examples) {
  const LRFuzzyNumber b(0, 1, 0.5, 0.5);
  const LRFuzzyNumber right_of_b(3, 4, 1, 1);
  EXPECT_EQ(NecessityGeqFuzzy(right_of_b, b), 1.0);
  EXPECT_EQ(NecessityGeqFuzzy(b, right_of_b), 0.0);

  const LRFuzzyNumber sym(0, 0, 1, 1);
  // The inf sits at u = -1/2, a grid point of the symmetric 1001-point grid.
  EXPECT_NEAR(NecessityGeqFuzzy(sym, sym, 1001), 0.5, 1e-12);
  EXPECT_NEAR(NecessityGeqFuzzy(sym, sym, 100), 0.5, 1.0 / 99);
}

TEST(NecessityGeqFuzzyTest, CrispOperandsArePointEvaluations) {
  EXPECT_EQ(NecessityGeqFuzzy(LRFuzzyNumber::Crisp(2), LRFuzzyNumber::Crisp(1)),
            1.0);
  EXPECT_EQ(NecessityGeqFuzzy(LRFuzzyNumber::Crisp(1), LRFuzzyNumber::Crisp(1)),
            1.0);
  EXPECT_EQ(NecessityGeqFuzzy(LRFuzzyNumber::Crisp(1), LRFuzzyNumber::Crisp(2)),
            0.0);
  EXPECT_THROW(NecessityGeqFuzzy(LRFuzzyNumber::Crisp(1),
                                 LRFuzzyNumber::Crisp(2), 10),
               std::invalid_argument);
}

TEST(NecessityGeqFuzzyTest, ClosedFormMatchesGridForCrispThreshold) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  constexpr int kGrid = 400;
  for (int trial = 0; trial < 300; ++trial) {
    const double a0 = -10 + 20 * u(rng);
    const LRFuzzyNumber a(a0, a0 + 3 * u(rng), 0.1 + 4 * u(rng),
                          0.1 + 4 * u(rng));
    const double f = a.a0() - 1.3 * a.beta() + 1.6 * a.beta() * u(rng);
    const LRFuzzyNumber crisp = LRFuzzyNumber::Crisp(f);
    const double span = std::max(a.Support().hi, f) - std::min(a.Support().lo, f);
    const double step = span / (kGrid - 1);
    EXPECT_NEAR(NecessityGeqFuzzy(a, crisp, kGrid), NecessityGeqScalar(a, f),
                2.0 * step / a.beta());
  }
}

}  // namespace
}  // namespace fuzzyica
