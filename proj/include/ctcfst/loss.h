// ctcfst/loss.h

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

#ifndef CTCFST_LOSS_H_
#define CTCFST_LOSS_H_

#include <optional>
#include <span>

#include "ctcfst/emissions.h"
#include "ctcfst/fst.h"

namespace ctcfst {

// connect(compose(topo, linear(target))).  An empty graph signals an
// unalignable target.
Wfst BuildSupervision(const Wfst &topo, std::span<const Label> target);

struct LossResult {
  // -log of the path-probability mass (+inf when no alignment exists).
  double loss = 0.0;
  // d loss / d emissions, same shape as the scored matrix; all-zero when the
  // loss is infinite.
  DenseEmissions grad;
};

// loss = -forward(dense_intersect(build_supervision(topo, target), em));
// grad[t][u] = -(occupancy posterior of emission u+1 at frame t).
// The target must not contain <blank> or epsilon.
LossResult CtcLossAndGrad(const Wfst &topo, std::span<const Label> target,
                          const DenseEmissions &em);

// Frame-doubling for the compact train-mode topology: 2T frames, N+1 units.
// Even rows (0-based) are the original rows with a zero-probability
// emulation column appended; odd rows are all probability one, letting the
// relabeled return arcs fire for free between real frames.
DenseEmissions AugmentEmissionsForCompact(const DenseEmissions &em);

// loss = forward(denominator lattice) - forward(numerator lattice);
// grad = denominator occupancy - numerator occupancy.  The beam, when given,
// prunes the denominator intersection only.  An empty numerator lattice
// yields +inf loss; an empty denominator is an error (it must cover every
// frame sequence).
LossResult MmiLossAndGrad(const Wfst &numerator, const Wfst &denominator,
                          const DenseEmissions &em,
                          std::optional<double> prune_beam = std::nullopt);

}  // namespace ctcfst

#endif  // CTCFST_LOSS_H_
