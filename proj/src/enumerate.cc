// ctcfst/enumerate.cc

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

#include "ctcfst/enumerate.h"

#include <cmath>
#include <map>
#include <utility>

namespace ctcfst {

namespace {

using TransductionKey = std::pair<std::vector<Label>, std::vector<Label>>;

struct Enumerator {
  const Wfst &f;
  const int32_t max_len;
  const int64_t cap;
  const int32_t max_depth;

  int64_t traversals = 0;
  std::map<TransductionKey, double> aggregated;
  std::vector<Label> input;
  std::vector<Label> output;

  Enumerator(const Wfst &fst, int32_t len, int64_t arc_cap)
      : f(fst),
        max_len(len),
        cap(arc_cap),
        // Any accepting path deeper than this contains a live epsilon cycle,
        // which makes the path set infinite; bail out before the stack does.
        max_depth((len + 1) * (fst.NumStates() + 1) + 2) {}

  void Visit(StateId s, int32_t depth, double weight) {
    if (depth > max_depth)
      CTCFST_ERR << "enumeration path cap exceeded (live epsilon cycle?); "
                    "try a smaller max_len than "
                 << max_len;
    double final_weight = f.Final(s);
    if (final_weight != kLogZero) {
      auto [it, inserted] = aggregated.try_emplace(
          TransductionKey{input, output}, kLogZero);
      it->second = LogAdd(it->second, Times(weight, final_weight));
    }
    for (const Arc &arc : f.ArcsFrom(s)) {
      if (arc.weight == kLogZero) continue;
      bool consumes = arc.ilabel != kEpsilon;
      if (consumes && static_cast<int32_t>(input.size()) >= max_len) continue;
      if (++traversals > cap)
        CTCFST_ERR << "enumeration path cap of " << cap
                   << " arc traversals exceeded; try a smaller max_len than "
                   << max_len;
      if (consumes) input.push_back(arc.ilabel);
      if (arc.olabel != kEpsilon) output.push_back(arc.olabel);
      Visit(arc.next_state, depth + 1, Times(weight, arc.weight));
      if (consumes) input.pop_back();
      if (arc.olabel != kEpsilon) output.pop_back();
    }
  }
};

std::string JoinLabels(const std::vector<Label> &labels) {
  std::ostringstream os;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ' ';
    os << labels[i];
  }
  return os.str();
}

}  // namespace

std::vector<Transduction> EnumerateTransductions(const Wfst &f,
                                                 int32_t max_len,
                                                 int64_t cap) {
  std::vector<Transduction> result;
  if (f.Start() == kNoStateId) return result;
  Enumerator enumerator(f, max_len, cap);
  enumerator.Visit(f.Start(), 0, kLogOne);
  result.reserve(enumerator.aggregated.size());
  for (const auto &[key, weight] : enumerator.aggregated)
    result.push_back(Transduction{key.first, key.second, weight});
  return result;
}

std::string EquivalenceResult::Describe() const {
  if (equivalent) return "equivalent";
  std::ostringstream os;
  os << "counterexample: input [" << JoinLabels(input) << "] output ["
     << JoinLabels(output) << "] weight ";
  if (weight_a == kLogZero)
    os << "absent";
  else
    os << weight_a;
  os << " vs ";
  if (weight_b == kLogZero)
    os << "absent";
  else
    os << weight_b;
  return os.str();
}

EquivalenceResult CheckEquivalent(const Wfst &a, const Wfst &b,
                                  int32_t max_len, double tolerance,
                                  int64_t cap) {
  std::vector<Transduction> ta = EnumerateTransductions(a, max_len, cap);
  std::vector<Transduction> tb = EnumerateTransductions(b, max_len, cap);
  size_t i = 0, j = 0;
  auto key_less = [](const Transduction &x, const Transduction &y) {
    return std::tie(x.input, x.output) < std::tie(y.input, y.output);
  };
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && key_less(ta[i], tb[j]))) {
      return EquivalenceResult{false, ta[i].input, ta[i].output, ta[i].weight,
                               kLogZero};
    }
    if (i == ta.size() || key_less(tb[j], ta[i])) {
      return EquivalenceResult{false, tb[j].input, tb[j].output, kLogZero,
                               tb[j].weight};
    }
    if (std::fabs(ta[i].weight - tb[j].weight) > tolerance) {
      return EquivalenceResult{false, ta[i].input, ta[i].output, ta[i].weight,
                               tb[j].weight};
    }
    ++i;
    ++j;
  }
  EquivalenceResult ok;
  ok.equivalent = true;
  return ok;
}

}  // namespace ctcfst
