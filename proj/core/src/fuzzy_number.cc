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

#include "fuzzyica/fuzzy_number.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fuzzyica/errors.h"

namespace fuzzyica {

ReferenceFunction ReferenceFunction::Power(double exponent) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw std::invalid_argument("reference exponent must be positive, got " +
                                std::to_string(exponent));
  }
  ReferenceFunction f;
  f.kind_ = Kind::kPower;
  f.exponent_ = exponent;
  return f;
}

double ReferenceFunction::Evaluate(double x) const {
  x = std::clamp(x, 0.0, 1.0);
  switch (kind_) {
    case Kind::kLinear:
      return 1.0 - x;
    case Kind::kPower:
      return 1.0 - std::pow(x, exponent_);
  }
  return 0.0;
}

double ReferenceFunction::PseudoInverse(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("pseudo-inverse level outside [0, 1]: " +
                            std::to_string(alpha));
  }
  switch (kind_) {
    case Kind::kLinear:
      return 1.0 - alpha;
    case Kind::kPower:
      return std::pow(1.0 - alpha, 1.0 / exponent_);
  }
  return 0.0;
}

LRFuzzyNumber::LRFuzzyNumber(double a0, double a1, double beta, double gamma,
                             ReferenceFunction left, ReferenceFunction right)
    : a0_(a0), a1_(a1), beta_(beta), gamma_(gamma), left_(left),
      right_(right) {
  if (!std::isfinite(a0) || !std::isfinite(a1) || !std::isfinite(beta) ||
      !std::isfinite(gamma)) {
    throw std::invalid_argument("LR fuzzy number parameters must be finite");
  }
  if (a0 > a1) throw std::invalid_argument("LR fuzzy number needs a0 <= a1");
  if (beta < 0.0 || gamma < 0.0) {
    throw std::invalid_argument("LR fuzzy number spreads must be >= 0");
  }
}

double LRFuzzyNumber::Membership(double x) const {
  if (x >= a0_ && x <= a1_) return 1.0;
  if (x < a0_) {
    if (beta_ == 0.0) return 0.0;
    const double u = (a0_ - x) / beta_;
    return u >= 1.0 ? 0.0 : left_.Evaluate(u);
  }
  if (gamma_ == 0.0) return 0.0;
  const double u = (x - a1_) / gamma_;
  return u >= 1.0 ? 0.0 : right_.Evaluate(u);
}

Interval LRFuzzyNumber::AlphaCut(double alpha) const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("alpha-cut level outside (0, 1]: " +
                            std::to_string(alpha));
  }
  return {a0_ - beta_ * left_.PseudoInverse(alpha),
          a1_ + gamma_ * right_.PseudoInverse(alpha)};
}

LRFuzzyNumber WeightedSum(std::span<const LRFuzzyNumber> terms,
                          std::span<const double> weights) {
  if (terms.size() != weights.size()) {
    throw std::invalid_argument("WeightedSum: " + std::to_string(terms.size()) +
                                " terms but " + std::to_string(weights.size()) +
                                " weights");
  }
  if (terms.empty()) return LRFuzzyNumber(0, 0, 0, 0);
  double a0 = 0, a1 = 0, beta = 0, gamma = 0;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const double w = weights[j];
    if (!(w >= 0.0)) {
      throw std::invalid_argument("WeightedSum: weight " + std::to_string(j) +
                                  " is negative");
    }
    if (terms[j].left() != terms[0].left() ||
        terms[j].right() != terms[0].right()) {
      throw std::invalid_argument(
          "WeightedSum: terms use different reference functions");
    }
    a0 += w * terms[j].a0();
    a1 += w * terms[j].a1();
    beta += w * terms[j].beta();
    gamma += w * terms[j].gamma();
  }
  return LRFuzzyNumber(a0, a1, beta, gamma, terms[0].left(), terms[0].right());
}

void FuzzyRandomReturn::Validate() const {
  for (auto [name, v] : {std::pair{"r0", r0}, std::pair{"r1", r1},
                         std::pair{"r2", r2}, std::pair{"beta", beta},
                         std::pair{"gamma", gamma}}) {
    if (!std::isfinite(v)) {
      throw ValidationError(std::string(name) + " must be finite");
    }
  }
  if (r0 > r1) throw ValidationError("r0 must not exceed r1");
  if (r2 < 0.0) throw ValidationError("r2 must be >= 0");
  if (beta < 0.0) throw ValidationError("beta must be >= 0");
  if (gamma < 0.0) throw ValidationError("gamma must be >= 0");
}

LRFuzzyNumber FuzzyRandomReturn::Observe(double t,
                                         ReferenceFunction shape) const {
  return LRFuzzyNumber(r0 + t * r2, r1 + t * r2, beta, gamma, shape, shape);
}

}  // namespace fuzzyica
