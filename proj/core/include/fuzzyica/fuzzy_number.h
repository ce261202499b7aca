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

#ifndef FUZZYICA_FUZZY_NUMBER_H_
#define FUZZYICA_FUZZY_NUMBER_H_

#include <span>
#include <vector>

namespace fuzzyica {

// Shoulder shape of an LR fuzzy number: a strictly decreasing continuous map
// [0,1] -> [0,1] with value 1 at 0 and 0 at 1.
//
// Two families are provided. kLinear is x -> 1 - x. kPower is
// x -> 1 - x^p with p > 0 (p = 1 coincides with kLinear).
class ReferenceFunction {
 public:
  enum class Kind { kLinear, kPower };

  ReferenceFunction() = default;

  static ReferenceFunction Linear() { return ReferenceFunction(); }
  // Throws std::invalid_argument unless exponent > 0 and finite.
  static ReferenceFunction Power(double exponent);

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }

  // Arguments outside [0,1] are clamped.
  double Evaluate(double x) const;

  // sup{t in [0,1] | Evaluate(t) >= alpha}. Throws std::domain_error when
  // alpha is outside [0,1].
  double PseudoInverse(double alpha) const;

  friend bool operator==(const ReferenceFunction&,
                         const ReferenceFunction&) = default;

 private:
  Kind kind_ = Kind::kLinear;
  double exponent_ = 1.0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool Contains(double x) const { return lo <= x && x <= hi; }
  bool Contains(const Interval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
};

// (a0, a1, beta, gamma)_LR: flat peak [a0, a1], left shoulder of width beta
// shaped by `left`, right shoulder of width gamma shaped by `right`.
class LRFuzzyNumber {
 public:
  // Throws std::invalid_argument if a0 > a1, a spread is negative, or any
  // parameter is not finite.
  LRFuzzyNumber(double a0, double a1, double beta, double gamma,
                ReferenceFunction left = {}, ReferenceFunction right = {});

  // Crisp number x: (x, x, 0, 0).
  static LRFuzzyNumber Crisp(double x) { return LRFuzzyNumber(x, x, 0, 0); }

  double a0() const { return a0_; }
  double a1() const { return a1_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  const ReferenceFunction& left() const { return left_; }
  const ReferenceFunction& right() const { return right_; }

  // [a0 - beta, a1 + gamma].
  Interval Support() const { return {a0_ - beta_, a1_ + gamma_}; }

  // Total on the reals. A zero spread turns the corresponding shoulder into a
  // step: the peak stays closed and everything beyond it has degree 0.
  double Membership(double x) const;

  // {x | Membership(x) >= alpha} for alpha in (0, 1]; std::domain_error
  // otherwise.
  Interval AlphaCut(double alpha) const;

  friend bool operator==(const LRFuzzyNumber&, const LRFuzzyNumber&) = default;

 private:
  double a0_;
  double a1_;
  double beta_;
  double gamma_;
  ReferenceFunction left_;
  ReferenceFunction right_;
};

// Sum_j weights[j] * terms[j] for nonnegative weights. Peaks and spreads are
// the corresponding dot products. All terms must share the same reference
// functions; an empty sum is (0, 0, 0, 0) with linear shoulders.
//
// Throws std::invalid_argument on length mismatch, a negative weight, or
// mixed reference functions.
LRFuzzyNumber WeightedSum(std::span<const LRFuzzyNumber> terms,
                          std::span<const double> weights);

// Return rate whose realization at factor value t is the LR fuzzy number
// (r0 + t*r2, r1 + t*r2, beta, gamma).
struct FuzzyRandomReturn {
  double r0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  // Throws ValidationError naming the failing field.
  void Validate() const;

  LRFuzzyNumber Observe(double t, ReferenceFunction shape = {}) const;

  friend bool operator==(const FuzzyRandomReturn&,
                         const FuzzyRandomReturn&) = default;
};

}  // namespace fuzzyica

#endif  // FUZZYICA_FUZZY_NUMBER_H_
