// ctcfst/lattice.cc

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

#include "ctcfst/lattice.h"

#include <cmath>
#include <map>

#include "ctcfst/fst-algo.h"

namespace ctcfst {

namespace {

// Incoming arc buffered while a frame layer is still candidate-only.  Intra-
// layer (epsilon) arcs name their source by graph state, since it has no
// lattice id until the layer survives pruning and is materialized.
struct BufferedArc {
  bool intra = false;
  StateId src = kNoStateId;  // lattice id, or graph state when intra
  Label ilabel = kEpsilon;
  Label olabel = kEpsilon;
  double weight = kLogZero;
};

struct Candidate {
  double best = kLogZero;  // tropical partial score, drives pruning
  std::vector<BufferedArc> in_arcs;
};

// Candidates keyed by (epsilon rank, graph state): iteration order is a
// valid relaxation schedule because epsilon arcs strictly increase rank, and
// materialization in this order keeps lattice arcs pointing id-upward.
using Layer = std::map<std::pair<int32_t, StateId>, Candidate>;

}  // namespace

bool Lattice::Empty() const {
  for (StateId s = 0; s < fst_.NumStates(); ++s)
    if (fst_.IsFinal(s)) return false;
  return true;
}

Lattice DenseIntersect(const Wfst &graph, const DenseEmissions &em,
                       std::optional<double> prune_beam) {
  if (prune_beam && !(*prune_beam > 0))
    CTCFST_ERR << "prune beam must be positive, got " << *prune_beam;
  for (StateId s = 0; s < graph.NumStates(); ++s)
    for (const Arc &arc : graph.ArcsFrom(s))
      if (arc.ilabel < 0 || arc.ilabel > em.units)
        CTCFST_ERR << "graph input label " << arc.ilabel << " at state " << s
                   << " outside the emission range 1.." << em.units;

  Lattice lat;
  lat.num_frames_ = em.frames;
  if (graph.Start() == kNoStateId) {
    lat.fst_.Freeze();
    return lat;
  }

  const std::vector<int32_t> rank = InputEpsilonRank(graph);
  std::vector<double> lattice_best;  // per materialized lattice state

  // Relaxes intra-layer epsilon arcs, prunes, then materializes the layer.
  // Returns the graph-state -> lattice-id map of survivors.
  auto close_layer = [&](Layer &layer, int32_t frame) {
    for (auto it = layer.begin(); it != layer.end(); ++it) {
      const auto &[key, cand] = *it;
      StateId q = key.second;
      if (cand.best == kLogZero) continue;
      for (const Arc &arc : graph.ArcsFrom(q)) {
        if (arc.ilabel != kEpsilon || arc.weight == kLogZero) continue;
        Candidate &dst = layer[{rank[arc.next_state], arc.next_state}];
        dst.best = TropicalAdd(dst.best, Times(cand.best, arc.weight));
        dst.in_arcs.push_back(
            BufferedArc{true, q, arc.ilabel, arc.olabel, arc.weight});
      }
    }
    double layer_best = kLogZero;
    for (const auto &[key, cand] : layer)
      layer_best = TropicalAdd(layer_best, cand.best);
    std::map<StateId, StateId> lattice_id;
    for (const auto &[key, cand] : layer) {
      if (prune_beam && cand.best < layer_best - *prune_beam) continue;
      StateId id = lat.fst_.AddState();
      lattice_id.emplace(key.second, id);
      lat.frame_of_.push_back(frame);
      lat.graph_state_of_.push_back(key.second);
      lattice_best.push_back(cand.best);
      for (const BufferedArc &in : cand.in_arcs) {
        StateId src;
        if (in.intra) {
          auto src_it = lattice_id.find(in.src);
          if (src_it == lattice_id.end()) continue;  // source was pruned
          src = src_it->second;
        } else {
          src = in.src;
        }
        lat.fst_.AddArc(src, in.ilabel, in.olabel, in.weight, id);
      }
    }
    return lattice_id;
  };

  Layer layer;
  layer[{rank[graph.Start()], graph.Start()}].best = kLogOne;
  std::map<StateId, StateId> alive;
  for (int32_t t = 0; t <= em.frames; ++t) {
    alive = close_layer(layer, t);
    if (t == 0) {
      if (alive.empty()) break;
      lat.fst_.SetStart(alive.at(graph.Start()));
    }
    if (t == em.frames || alive.empty()) break;
    layer.clear();
    for (const auto &[q, id] : alive) {
      for (const Arc &arc : graph.ArcsFrom(q)) {
        if (arc.ilabel == kEpsilon) continue;
        double weight = Times(arc.weight, em.LogProb(t, arc.ilabel));
        if (weight == kLogZero) continue;
        Candidate &dst = layer[{rank[arc.next_state], arc.next_state}];
        dst.best = TropicalAdd(dst.best, Times(lattice_best[id], weight));
        dst.in_arcs.push_back(
            BufferedArc{false, id, arc.ilabel, arc.olabel, weight});
      }
    }
  }
  // Only full-length paths accept: finals live on the last frame layer.
  if (static_cast<int32_t>(lat.fst_.NumStates()) > 0) {
    for (const auto &[q, id] : alive) {
      if (lat.frame_of_[id] == em.frames && graph.IsFinal(q))
        lat.fst_.SetFinal(id, graph.Final(q));
    }
  }
  lat.fst_.Freeze();
  return lat;
}

namespace {

std::vector<double> ForwardValues(const Lattice &lat, bool tropical) {
  const Wfst &f = lat.Graph();
  std::vector<double> alpha(f.NumStates(), kLogZero);
  if (f.Start() == kNoStateId) return alpha;
  alpha[f.Start()] = kLogOne;
  for (StateId s = 0; s < f.NumStates(); ++s) {
    if (alpha[s] == kLogZero) continue;
    for (const Arc &arc : f.ArcsFrom(s)) {
      double via = Times(alpha[s], arc.weight);
      alpha[arc.next_state] = tropical ? TropicalAdd(alpha[arc.next_state], via)
                                       : LogAdd(alpha[arc.next_state], via);
    }
  }
  return alpha;
}

double TotalScore(const Lattice &lat, bool tropical) {
  const Wfst &f = lat.Graph();
  std::vector<double> alpha = ForwardValues(lat, tropical);
  double total = kLogZero;
  for (StateId s = 0; s < f.NumStates(); ++s) {
    if (!f.IsFinal(s) || alpha[s] == kLogZero) continue;
    double complete = Times(alpha[s], f.Final(s));
    total = tropical ? TropicalAdd(total, complete) : LogAdd(total, complete);
  }
  return total;
}

}  // namespace

double ForwardScoreLog(const Lattice &lat) { return TotalScore(lat, false); }

double ForwardScoreTropical(const Lattice &lat) {
  return TotalScore(lat, true);
}

LatticePath BestPath(const Lattice &lat) {
  LatticePath path;
  const Wfst &f = lat.Graph();
  if (f.Start() == kNoStateId) return path;

  struct Back {
    StateId pred = kNoStateId;
    Label ilabel = kEpsilon;
    Label olabel = kEpsilon;
  };
  std::vector<double> best(f.NumStates(), kLogZero);
  std::vector<Back> back(f.NumStates());
  best[f.Start()] = kLogOne;
  // States ascend topologically, so scanning sources in id order makes the
  // strictly-greater update rule keep the smallest predecessor id on ties.
  for (StateId s = 0; s < f.NumStates(); ++s) {
    if (best[s] == kLogZero) continue;
    for (const Arc &arc : f.ArcsFrom(s)) {
      double via = Times(best[s], arc.weight);
      if (via > best[arc.next_state]) {
        best[arc.next_state] = via;
        back[arc.next_state] = Back{s, arc.ilabel, arc.olabel};
      }
    }
  }
  StateId final_state = kNoStateId;
  for (StateId s = 0; s < f.NumStates(); ++s) {
    if (!f.IsFinal(s) || best[s] == kLogZero) continue;
    double complete = Times(best[s], f.Final(s));
    if (complete > path.score) {
      path.score = complete;
      final_state = s;
    }
  }
  if (final_state == kNoStateId) return path;

  for (StateId s = final_state; s != f.Start(); s = back[s].pred) {
    if (back[s].ilabel != kEpsilon) path.ilabels.push_back(back[s].ilabel);
    if (back[s].olabel != kEpsilon) path.olabels.push_back(back[s].olabel);
  }
  std::reverse(path.ilabels.begin(), path.ilabels.end());
  std::reverse(path.olabels.begin(), path.olabels.end());
  return path;
}

DenseEmissions OccupancyPosteriors(const Lattice &lat, int32_t num_units) {
  DenseEmissions post(lat.NumFrames(), num_units, 0.0);
  const Wfst &f = lat.Graph();
  if (f.Start() == kNoStateId) return post;

  std::vector<double> alpha = ForwardValues(lat, /*tropical=*/false);
  std::vector<double> beta(f.NumStates(), kLogZero);
  double total = kLogZero;
  for (StateId s = f.NumStates() - 1; s >= 0; --s) {
    double b = f.Final(s);
    for (const Arc &arc : f.ArcsFrom(s))
      b = LogAdd(b, Times(arc.weight, beta[arc.next_state]));
    beta[s] = b;
  }
  if (alpha[f.Start()] != kLogZero) total = beta[f.Start()];
  if (total == kLogZero) return post;  // empty lattice: zero posteriors

  for (StateId s = 0; s < f.NumStates(); ++s) {
    if (alpha[s] == kLogZero) continue;
    for (const Arc &arc : f.ArcsFrom(s)) {
      if (arc.ilabel == kEpsilon) continue;
      double mass = Times(Times(alpha[s], arc.weight), beta[arc.next_state]);
      if (mass == kLogZero) continue;
      post.At(lat.FrameOf(s), arc.ilabel - 1) += std::exp(mass - total);
    }
  }
  return post;
}

}  // namespace ctcfst
