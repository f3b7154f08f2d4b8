// ctcfst/lattice.h

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

#ifndef CTCFST_LATTICE_H_
#define CTCFST_LATTICE_H_

#include <optional>
#include <vector>

#include "ctcfst/emissions.h"
#include "ctcfst/fst.h"

namespace ctcfst {

// Acyclic alignment graph from intersecting a graph with a T x N emission
// matrix.  States are (frame, graph state) pairs in frame-major topological
// order: emission arcs step frame t to t+1 and carry graph weight plus
// em[t][ilabel-1]; epsilon graph arcs stay within a frame and carry graph
// weight only.  Frame() of an arc's source tells which emission row it read.
class Lattice {
 public:
  const Wfst &Graph() const { return fst_; }
  int32_t NumFrames() const { return num_frames_; }
  int32_t FrameOf(StateId s) const { return frame_of_[s]; }
  StateId GraphStateOf(StateId s) const { return graph_state_of_[s]; }
  bool Empty() const;  // no accepting path

 private:
  friend Lattice DenseIntersect(const Wfst &, const DenseEmissions &,
                                std::optional<double>);
  Wfst fst_;
  int32_t num_frames_ = 0;
  std::vector<int32_t> frame_of_;
  std::vector<StateId> graph_state_of_;
};

// Intersects `graph` with `em`.  Epsilon arcs are expanded within each frame
// (the epsilon subgraph must be acyclic); every graph arc with a nonzero
// emission probability extends the frontier to the next frame.  With
// `prune_beam` set, states whose best tropical partial score falls more than
// the beam below the frame-best are dropped before they are materialized.
Lattice DenseIntersect(const Wfst &graph, const DenseEmissions &em,
                       std::optional<double> prune_beam = std::nullopt);

// Log-semiring sum over all complete paths; kLogZero when the lattice is
// empty.
double ForwardScoreLog(const Lattice &lat);

// Best (tropical) complete-path score; kLogZero when empty.
double ForwardScoreTropical(const Lattice &lat);

struct LatticePath {
  double score = kLogZero;
  std::vector<Label> ilabels;  // per frame, epsilon entries omitted => size T
  std::vector<Label> olabels;  // non-epsilon outputs in path order
};

// Tropical best path with deterministic tie-breaking (on equal scores the
// smaller predecessor lattice-state id wins).
LatticePath BestPath(const Lattice &lat);

// Per-frame emission occupancy posteriors (probability domain), a T x N
// matrix aligned with the emissions that built the lattice: entry (t, u) is
// the posterior mass of arcs that consumed emission id u+1 at frame t.  Zero
// everywhere when the lattice is empty.
DenseEmissions OccupancyPosteriors(const Lattice &lat, int32_t num_units);

}  // namespace ctcfst

#endif  // CTCFST_LATTICE_H_
