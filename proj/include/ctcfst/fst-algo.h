// ctcfst/fst-algo.h

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

#ifndef CTCFST_FST_ALGO_H_
#define CTCFST_FST_ALGO_H_

#include <vector>

#include "ctcfst/fst.h"

namespace ctcfst {

// Composition a .o. b: matches a's output tape against b's input tape and
// returns the trimmed composition.  Epsilon moves are sequenced through a
// three-state filter so that every pair of operand paths yields exactly one
// composed path (a prerequisite for log-semiring score preservation).  When
// one operand has no epsilon on the shared tape the filter is skipped — the
// interleaving of solo moves is already forced, and the result then contains
// no filter-split states.
// Requires a.OutputSymbols() == b.InputSymbols() when both are attached.
Wfst Compose(const Wfst &a, const Wfst &b);

// Removes every state that is not on some start-to-final path.  The weighted
// transduction is unchanged.  May return an empty graph (no states).
Wfst Connect(const Wfst &f);

// Eliminates arcs with ilabel == 0 && olabel == 0 by folding their weighted
// closure (log-semiring sum over parallel epsilon paths) into outgoing arcs
// and final weights.  Epsilon-free inputs are returned unchanged.
// Fails if the graph has an epsilon cycle with probability > 0.
Wfst RemoveEpsilon(const Wfst &f);

// Renumbers states so that every arc goes from a lower to a higher id; the
// transduction and the start/final structure are preserved.
// Fails with a witness cycle if the graph is not a DAG.
Wfst TopologicalSort(const Wfst &f);

// True when the graph (all arcs) is a DAG.
bool IsAcyclic(const Wfst &f);

// Ranks states by longest epsilon-path depth: every arc with ilabel == 0 and
// olabel == 0 and weight > zero goes from a lower to a higher rank.  Fails
// naming a state on the cycle if the (non-zero-weight) epsilon subgraph is
// cyclic.
std::vector<int32_t> EpsilonRank(const Wfst &f);

// Same ranking over the input-epsilon subgraph (ilabel == 0, any olabel,
// weight > zero) — the arcs that consume no frame during dense intersection
// and per-frame decoding.
std::vector<int32_t> InputEpsilonRank(const Wfst &f);

}  // namespace ctcfst

#endif  // CTCFST_FST_ALGO_H_
