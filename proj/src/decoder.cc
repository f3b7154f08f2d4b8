// ctcfst/decoder.cc

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

#include "ctcfst/decoder.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "ctcfst/fst-io.h"

namespace ctcfst {

std::vector<Label> Collapse(std::span<const Label> labels) {
  std::vector<Label> out;
  Label previous = kEpsilon;
  for (Label label : labels) {
    if (label < 1) CTCFST_ERR << "collapse input contains id " << label;
    if (label != previous && label != kBlank) out.push_back(label);
    previous = label;
  }
  return out;
}

Hypothesis GreedyDecode(const DenseEmissions &em) {
  if (em.units < 1) CTCFST_ERR << "greedy decode needs at least one unit";
  Hypothesis hyp;
  hyp.score = kLogOne;
  hyp.frame_labels.reserve(em.frames);
  for (int32_t t = 0; t < em.frames; ++t) {
    int32_t best_u = 0;
    for (int32_t u = 1; u < em.units; ++u)
      if (em.At(t, u) > em.At(t, best_u)) best_u = u;
    hyp.frame_labels.push_back(best_u + 1);
    hyp.score = Times(hyp.score, em.At(t, best_u));
  }
  hyp.words = Collapse(hyp.frame_labels);
  return hyp;
}

namespace {

struct Token {
  double score = kLogZero;
  int32_t pred = -1;          // arena index of the predecessor token
  StateId pred_state = kNoStateId;  // graph state the arc came from
  Label ilabel = kEpsilon;
  Label olabel = kEpsilon;
};

// Tokens for one frame layer, keyed by graph state (ordered, so expansion
// and relaxation sweeps are deterministic).
using TokenLayer = std::map<StateId, int32_t>;

}  // namespace

Hypothesis ViterbiDecode(const Wfst &graph, const DenseEmissions &em,
                         double beam) {
  if (!(beam > 0)) CTCFST_ERR << "beam must be positive, got " << beam;
  if (graph.Start() == kNoStateId) CTCFST_ERR << "cannot decode an empty graph";
  for (StateId s = 0; s < graph.NumStates(); ++s)
    for (const Arc &arc : graph.ArcsFrom(s))
      if (arc.ilabel < 0 || arc.ilabel > em.units)
        CTCFST_ERR << "graph input label " << arc.ilabel << " at state " << s
                   << " outside the emission range 1.." << em.units;

  std::vector<Token> arena;
  const StateId num_states = graph.NumStates();

  // Improves (score, then smaller predecessor state) the token at `state`.
  // Returns true when the score strictly improved.
  auto relax = [&](TokenLayer &layer, StateId state, const Token &candidate) {
    auto [it, inserted] = layer.try_emplace(state, -1);
    if (inserted) {
      it->second = static_cast<int32_t>(arena.size());
      arena.push_back(candidate);
      return true;
    }
    Token &existing = arena[it->second];
    if (candidate.score > existing.score) {
      existing = candidate;
      return true;
    }
    if (candidate.score == existing.score &&
        candidate.pred_state < existing.pred_state)
      existing = candidate;
    return false;
  };

  // Breadth-first epsilon relaxation within one layer.  Tropical weights
  // cannot improve around probability-one cycles, so the sweep settles; the
  // per-state visit cap guards adversarial graphs with gain cycles.
  auto epsilon_closure = [&](TokenLayer &layer) {
    std::deque<StateId> queue;
    for (const auto &[state, token] : layer) queue.push_back(state);
    std::vector<int32_t> visits(num_states, 0);
    while (!queue.empty()) {
      StateId state = queue.front();
      queue.pop_front();
      if (visits[state]++ > num_states) continue;
      double score = arena[layer.at(state)].score;
      for (const Arc &arc : graph.ArcsFrom(state)) {
        if (arc.ilabel != kEpsilon || arc.weight == kLogZero) continue;
        Token token{Times(score, arc.weight), layer.at(state), state,
                    arc.ilabel, arc.olabel};
        if (relax(layer, arc.next_state, token))
          queue.push_back(arc.next_state);
      }
    }
  };

  auto prune = [&](TokenLayer &layer) {
    if (std::isinf(beam)) return;
    double best = kLogZero;
    for (const auto &[state, token] : layer)
      best = std::max(best, arena[token].score);
    for (auto it = layer.begin(); it != layer.end();) {
      if (arena[it->second].score < best - beam)
        it = layer.erase(it);
      else
        ++it;
    }
  };

  TokenLayer layer;
  relax(layer, graph.Start(),
        Token{kLogOne, -1, kNoStateId, kEpsilon, kEpsilon});
  epsilon_closure(layer);
  prune(layer);

  for (int32_t t = 0; t < em.frames; ++t) {
    TokenLayer next;
    for (const auto &[state, token_index] : layer) {
      double score = arena[token_index].score;
      for (const Arc &arc : graph.ArcsFrom(state)) {
        if (arc.ilabel == kEpsilon) continue;
        double weight = Times(arc.weight, em.LogProb(t, arc.ilabel));
        if (weight == kLogZero) continue;
        relax(next, arc.next_state,
              Token{Times(score, weight), token_index, state, arc.ilabel,
                    arc.olabel});
      }
    }
    if (next.empty()) CTCFST_ERR << "empty beam at frame " << t;
    epsilon_closure(next);
    prune(next);
    layer = std::move(next);
  }

  Hypothesis hyp;
  int32_t best_token = -1;
  for (const auto &[state, token_index] : layer) {
    if (!graph.IsFinal(state)) continue;
    double complete = Times(arena[token_index].score, graph.Final(state));
    if (complete > hyp.score) {
      hyp.score = complete;
      best_token = token_index;
    }
  }
  if (best_token < 0)
    CTCFST_ERR << "no final state reachable after " << em.frames << " frames";

  for (int32_t cursor = best_token; cursor >= 0;
       cursor = arena[cursor].pred) {
    if (arena[cursor].ilabel != kEpsilon)
      hyp.frame_labels.push_back(arena[cursor].ilabel);
    if (arena[cursor].olabel != kEpsilon)
      hyp.words.push_back(arena[cursor].olabel);
  }
  std::reverse(hyp.frame_labels.begin(), hyp.frame_labels.end());
  std::reverse(hyp.words.begin(), hyp.words.end());
  return hyp;
}

std::string FormatHypothesis(const std::string &utt_id, const Hypothesis &hyp,
                             const SymbolTable *words) {
  std::ostringstream os;
  os << utt_id << '\t' << FormatDouble(hyp.score) << '\t';
  for (size_t i = 0; i < hyp.words.size(); ++i) {
    if (i) os << ' ';
    if (words)
      os << words->Find(hyp.words[i]);
    else
      os << hyp.words[i];
  }
  return os.str();
}

}  // namespace ctcfst
