// ctcfst/emissions.h

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

#ifndef CTCFST_EMISSIONS_H_
#define CTCFST_EMISSIONS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ctcfst/common.h"
#include "ctcfst/semiring.h"

namespace ctcfst {

// T x N matrix of natural-log probabilities, frame-major.  Column u holds
// emission id u+1 (column 0 is <blank>).
struct DenseEmissions {
  int32_t frames = 0;  // T
  int32_t units = 0;   // N (or N+1 after augmentation)
  std::vector<double> values;  // frames * units entries

  DenseEmissions() = default;
  DenseEmissions(int32_t t, int32_t n, double fill = 0.0)
      : frames(t), units(n), values(static_cast<size_t>(t) * n, fill) {}

  double &At(int32_t t, int32_t u) {
    return values[static_cast<size_t>(t) * units + u];
  }
  double At(int32_t t, int32_t u) const {
    return values[static_cast<size_t>(t) * units + u];
  }
  // Log-probability of emission id `label` (>= 1) at frame t; labels beyond
  // the matrix width have probability zero.
  double LogProb(int32_t t, Label label) const {
    if (label < 1 || label > units) return kLogZero;
    return At(t, label - 1);
  }
};

// TSV with a "#T N" header line, then one tab-separated row per frame.
// "inf"/"-inf" spell infinite values.
DenseEmissions ReadEmissionsTsv(std::istream &is);
DenseEmissions ReadEmissionsTsv(const std::string &path);
void WriteEmissionsTsv(const DenseEmissions &em, std::ostream &os);
void WriteEmissionsTsv(const DenseEmissions &em, const std::string &path);

// Verifies each row's log-sum-exp is 0 within `tolerance`.
void CheckNormalized(const DenseEmissions &em, double tolerance = 1e-6);

// Log-softmax each row in place (used by fixture generators).
void NormalizeRows(DenseEmissions &em);

}  // namespace ctcfst

#endif  // CTCFST_EMISSIONS_H_
