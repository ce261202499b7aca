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

#include "fuzzyica/normal.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fuzzyica/errors.h"

namespace fuzzyica {

double NormalCdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double NormalQuantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal quantile needs 0 < p < 1, got " +
                            std::to_string(p));
  }
  if (p == 0.5) return 0.0;
  // Solve in the lower tail, where erfc keeps relative precision, and reflect.
  const bool upper = p > 0.5;
  const double q = upper ? 1.0 - p : p;
  // Phi(-40) underflows to 0, so the root is inside for any representable q.
  double lo = -40.0;
  double hi = 0.0;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (NormalCdf(mid) < q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Phi(lo) < q <= Phi(hi) with lo, hi adjacent doubles. Reflecting lo keeps
  // the result on the inf side: Phi(-lo) > 1 - q = p.
  return upper ? -lo : hi;
}

void RandomFactor::Validate() const {
  if (!std::isfinite(mean)) throw ValidationError("factor.mean must be finite");
  if (!(std_dev > 0.0) || !std::isfinite(std_dev)) {
    throw ValidationError("factor.std_dev must be positive");
  }
}

}  // namespace fuzzyica
