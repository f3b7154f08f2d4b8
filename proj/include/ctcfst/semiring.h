// ctcfst/semiring.h

// Copyright 2026  The ctcfst authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CTCFST_SEMIRING_H_
#define CTCFST_SEMIRING_H_

#include <algorithm>
#include <cmath>
#include <limits>

namespace ctcfst {

// Weights are natural-log probabilities.  Sums of path probabilities use the
// log semiring (LogAdd, +); best-path computations use the tropical semiring
// (max, +).  Both share the same zero/one.
constexpr double kLogZero = -std::numeric_limits<double>::infinity();
constexpr double kLogOne = 0.0;

// Stable log(e^a + e^b).  Exact when either side is the additive zero:
// no NaN is produced for (-inf) + (-inf).
inline double LogAdd(double a, double b) {
  if (a == kLogZero) return b;
  if (b == kLogZero) return a;
  double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

inline double TropicalAdd(double a, double b) { return std::max(a, b); }

// Semiring multiplication: product of probabilities.  -inf absorbs.
inline double Times(double a, double b) {
  if (a == kLogZero || b == kLogZero) return kLogZero;
  return a + b;
}

}  // namespace ctcfst

#endif  // CTCFST_SEMIRING_H_
