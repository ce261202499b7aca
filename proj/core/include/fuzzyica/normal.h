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

#ifndef FUZZYICA_NORMAL_H_
#define FUZZYICA_NORMAL_H_

namespace fuzzyica {

// Standard normal distribution function, via erfc so that both tails keep
// full relative precision.
double NormalCdf(double x);

// T*(p) = inf{t | T(t) >= p} for the standard normal T. Computed by bisection
// on NormalCdf; the result brackets the root to within a few ulps.
// Throws std::domain_error unless 0 < p < 1.
double NormalQuantile(double p);

// The normally distributed factor that shifts every return's peaks.
struct RandomFactor {
  double mean = 0.0;
  double std_dev = 1.0;

  // Throws ValidationError unless std_dev > 0 and both fields are finite.
  void Validate() const;

  double Cdf(double t) const { return NormalCdf((t - mean) / std_dev); }
  double Quantile(double p) const { return mean + std_dev * NormalQuantile(p); }

  friend bool operator==(const RandomFactor&, const RandomFactor&) = default;
};

}  // namespace fuzzyica

#endif  // FUZZYICA_NORMAL_H_
