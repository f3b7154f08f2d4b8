// ctcfst/enumerate.h

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

#ifndef CTCFST_ENUMERATE_H_
#define CTCFST_ENUMERATE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ctcfst/fst.h"

namespace ctcfst {

// One aggregated transduction: weight is the log-semiring sum over every
// accepting path with this (input, output) label pair.  Epsilon labels do not
// appear in the sequences.
struct Transduction {
  std::vector<Label> input;
  std::vector<Label> output;
  double weight = kLogZero;
};

constexpr int64_t kDefaultEnumerationCap = 10'000'000;

// Exhaustive small-instance oracle: every accepted input sequence of length
// <= max_len with its output sequence(s), weights log-added per (input,
// output) pair, sorted lexicographically by input then output.  `cap` bounds
// the total number of arc traversals (guards epsilon cycles and blowups).
std::vector<Transduction> EnumerateTransductions(
    const Wfst &f, int32_t max_len, int64_t cap = kDefaultEnumerationCap);

struct EquivalenceResult {
  bool equivalent = false;
  // First differing triple (by input, then output) when not equivalent.
  std::vector<Label> input;
  std::vector<Label> output;
  double weight_a = kLogZero;  // aggregated weight in a (zero if absent)
  double weight_b = kLogZero;  // aggregated weight in b (zero if absent)

  std::string Describe() const;
};

// Compares the aggregated (input, output, weight) maps of a and b over all
// inputs of length <= max_len; weights must agree within `tolerance`.
EquivalenceResult CheckEquivalent(const Wfst &a, const Wfst &b,
                                  int32_t max_len, double tolerance = 1e-9,
                                  int64_t cap = kDefaultEnumerationCap);

}  // namespace ctcfst

#endif  // CTCFST_ENUMERATE_H_
