// ctcfst/loss.cc

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

#include "ctcfst/loss.h"

#include <limits>

#include "ctcfst/fst-algo.h"
#include "ctcfst/graph-pipeline.h"
#include "ctcfst/lattice.h"

namespace ctcfst {

Wfst BuildSupervision(const Wfst &topo, std::span<const Label> target) {
  for (Label unit : target)
    if (unit == kEpsilon || unit == kBlank)
      CTCFST_ERR << "supervision target may not contain <blank> or epsilon "
                    "(unit id "
                 << unit << ")";
  return Connect(Compose(topo, BuildLinear(target)));
}

LossResult CtcLossAndGrad(const Wfst &topo, std::span<const Label> target,
                          const DenseEmissions &em) {
  LossResult result;
  Wfst supervision;
  if (target.empty()) {
    // A linear graph needs a non-empty sequence, but the empty target is a
    // legitimate supervision (all-<blank> alignments): compose against the
    // one-state acceptor of the empty language instead.
    Wfst empty_target;
    StateId s = empty_target.AddState();
    empty_target.SetStart(s);
    empty_target.SetFinal(s, kLogOne);
    empty_target.Freeze();
    supervision = Connect(Compose(topo, empty_target));
  } else {
    supervision = BuildSupervision(topo, target);
  }
  Lattice lat = DenseIntersect(supervision, em);
  double score = ForwardScoreLog(lat);
  if (score == kLogZero) {
    result.loss = std::numeric_limits<double>::infinity();
    result.grad = DenseEmissions(em.frames, em.units, 0.0);
    return result;
  }
  result.loss = -score;
  result.grad = OccupancyPosteriors(lat, em.units);
  for (double &g : result.grad.values) g = -g;
  return result;
}

DenseEmissions AugmentEmissionsForCompact(const DenseEmissions &em) {
  DenseEmissions out(2 * em.frames, em.units + 1, 0.0);
  for (int32_t t = 0; t < em.frames; ++t) {
    for (int32_t u = 0; u < em.units; ++u) out.At(2 * t, u) = em.At(t, u);
    out.At(2 * t, em.units) = kLogZero;
    // odd rows stay exactly 0 (probability one for every unit)
  }
  return out;
}

LossResult MmiLossAndGrad(const Wfst &numerator, const Wfst &denominator,
                          const DenseEmissions &em,
                          std::optional<double> prune_beam) {
  Lattice den_lat = DenseIntersect(denominator, em, prune_beam);
  double den_score = ForwardScoreLog(den_lat);
  if (den_score == kLogZero)
    CTCFST_ERR << "denominator lattice is empty; the denominator graph must "
                  "cover every frame sequence";

  LossResult result;
  Lattice num_lat = DenseIntersect(numerator, em);
  double num_score = ForwardScoreLog(num_lat);
  if (num_score == kLogZero) {
    result.loss = std::numeric_limits<double>::infinity();
    result.grad = DenseEmissions(em.frames, em.units, 0.0);
    return result;
  }
  result.loss = den_score - num_score;
  DenseEmissions den_occ = OccupancyPosteriors(den_lat, em.units);
  DenseEmissions num_occ = OccupancyPosteriors(num_lat, em.units);
  result.grad = DenseEmissions(em.frames, em.units, 0.0);
  for (size_t i = 0; i < result.grad.values.size(); ++i)
    result.grad.values[i] = den_occ.values[i] - num_occ.values[i];
  return result;
}

}  // namespace ctcfst
