// ctcfst/decoder.h

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

#ifndef CTCFST_DECODER_H_
#define CTCFST_DECODER_H_

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ctcfst/emissions.h"
#include "ctcfst/fst.h"

namespace ctcfst {

// CTC collapse: merge adjacent equal ids, then delete <blank>.
std::vector<Label> Collapse(std::span<const Label> labels);

struct Hypothesis {
  std::vector<Label> words;         // no epsilon, no <blank>
  double score = kLogZero;          // tropical best-path score
  std::vector<Label> frame_labels;  // length T
};

// Per-frame argmax (ties to the lowest id), collapsed; score is the sum of
// the row maxima.
Hypothesis GreedyDecode(const DenseEmissions &em);

// Tropical best path through the dense intersection of `graph` with `em`,
// token-passing style: per frame, expand emission arcs, then relax epsilon
// arcs breadth-first (at most |states| sweeps), then beam-prune against the
// frame-best.  With beam = +inf the search is exact.  Ties break towards the
// smaller predecessor graph-state id so output is reproducible.
// Fails with the frame index if no state survives a frame.
Hypothesis ViterbiDecode(
    const Wfst &graph, const DenseEmissions &em,
    double beam = std::numeric_limits<double>::infinity());

// "utt_id<TAB>score<TAB>word1 word2 ...".  Words render through `words`
// when given, as bare ids otherwise.
std::string FormatHypothesis(const std::string &utt_id, const Hypothesis &hyp,
                             const SymbolTable *words);

}  // namespace ctcfst

#endif  // CTCFST_DECODER_H_
