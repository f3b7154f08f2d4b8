// ctcfst/topology.h

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

#ifndef CTCFST_TOPOLOGY_H_
#define CTCFST_TOPOLOGY_H_

#include <string>

#include "ctcfst/fst.h"

namespace ctcfst {

// The four CTC topology families.  All are transducers from frame-level
// emission labels (<blank> = 1, language units 2..N) to language-unit output
// sequences; <blank> never reaches the output tape.
//
//   correct: one state per unit (including <blank>), complete digraph.
//            Self-loops re-emit the current unit as epsilon; cross arcs
//            consume the destination unit and output it (epsilon when the
//            destination is <blank>).  N states, N^2 arcs.
//   eesen:   unit states wrapped by blank/start plumbing with epsilon
//            loop-backs.  N+2 states, 3N+1 arcs.
//   compact: single <blank> hub state; unit states return to the hub by a
//            single epsilon arc instead of pairwise cross arcs.  N states,
//            3N-2 arcs.
//   minimal: one state whose self-loops consume <blank> (to epsilon) and
//            each unit (to itself).  1 state, N arcs.
enum class TopologyKind { kCorrect, kEesen, kCompact, kMinimal };

enum class TopologyMode { kDecode, kTrain };

struct TopologySpec {
  TopologyKind kind = TopologyKind::kCorrect;
  int32_t n_units = 0;  // N, counting <blank>; language units are N-1
  // Drops the unit:epsilon self-loops (minimal has none by construction).
  bool selfless = false;
  // In train mode compact's epsilon return arcs are relabeled with an
  // emulation unit (emission id N+1) so that a frame-doubled emission matrix
  // can drive them through dense intersection; other kinds are unaffected.
  TopologyMode mode = TopologyMode::kDecode;
};

// Number of emission symbols the topology consumes (N, or N+1 when the
// compact train-mode emulation unit is in play).
int32_t EmissionUnits(const TopologySpec &spec);

Wfst BuildTopology(const TopologySpec &spec);

// Removes every self-loop with a non-blank input label and epsilon output
// label; exactly N-1 arcs for the three families that have them.  Rejects
// graphs with unit:unit self-loops (the minimal family).
Wfst MakeSelfless(const Wfst &topology);

TopologyKind ParseTopologyKind(const std::string &name);
std::string TopologyKindName(TopologyKind kind);

}  // namespace ctcfst

#endif  // CTCFST_TOPOLOGY_H_
