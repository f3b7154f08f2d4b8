// ctcfst/fst-algo.cc

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

#include "ctcfst/fst-algo.h"

#include <algorithm>
#include <deque>
#include <queue>
#include <unordered_map>

namespace ctcfst {

namespace {

// Pure-epsilon arc that can carry probability mass.
bool IsLiveEpsilonArc(const Arc &arc) {
  return arc.ilabel == kEpsilon && arc.olabel == kEpsilon &&
         arc.weight != kLogZero;
}

}  // namespace

Wfst Compose(const Wfst &a, const Wfst &b) {
  if (a.OutputSymbols() && b.InputSymbols() &&
      !(*a.OutputSymbols() == *b.InputSymbols())) {
    CTCFST_ERR << "compose: output symbol table \"" << a.OutputSymbols()->Name()
               << "\" (" << a.OutputSymbols()->Size()
               << " symbols) does not match input symbol table \""
               << b.InputSymbols()->Name() << "\" ("
               << b.InputSymbols()->Size() << " symbols)";
  }

  Wfst out;
  out.SetInputSymbols(a.InputSymbols());
  out.SetOutputSymbols(b.OutputSymbols());
  if (a.Start() == kNoStateId || b.Start() == kNoStateId) {
    out.Freeze();
    return out;
  }

  // The three-state filter sequences runs of epsilon moves between matches:
  // state 0 permits matches, paired epsilon moves, and the first solo move;
  // a solo move on a's side locks state 1 (further a-solos only), on b's side
  // state 2.  Any non-canonical interleaving dead-ends and is trimmed.  If a
  // side has no epsilon on the shared tape the interleaving is already
  // unambiguous and the filter (with its state splitting) is unnecessary.
  const bool use_filter = a.HasEpsilonOutput() && b.HasEpsilonInput();

  std::unordered_map<int64_t, StateId> ids;
  std::deque<std::tuple<StateId, StateId, int>> queue;
  const int64_t b_states = b.NumStates();
  auto state_of = [&](StateId qa, StateId qb, int filter) {
    int64_t key = (static_cast<int64_t>(qa) * b_states + qb) * 3 + filter;
    auto [it, inserted] = ids.emplace(key, out.NumStates());
    if (inserted) {
      StateId s = out.AddState();
      out.SetFinal(s, Times(a.Final(qa), b.Final(qb)));
      queue.emplace_back(qa, qb, filter);
    }
    return it->second;
  };

  out.SetStart(state_of(a.Start(), b.Start(), 0));
  while (!queue.empty()) {
    auto [qa, qb, filter] = queue.front();
    queue.pop_front();
    StateId s = state_of(qa, qb, filter);
    for (const Arc &arc_a : a.ArcsFrom(qa)) {
      if (arc_a.olabel == kEpsilon) {
        if (!use_filter || filter != 2) {
          out.AddArc(s, arc_a.ilabel, kEpsilon, arc_a.weight,
                     state_of(arc_a.next_state, qb, use_filter ? 1 : 0));
        }
        if (use_filter && filter == 0) {
          for (const Arc &arc_b : b.ArcsFrom(qb)) {
            if (arc_b.ilabel != kEpsilon) continue;
            out.AddArc(s, arc_a.ilabel, arc_b.olabel,
                       Times(arc_a.weight, arc_b.weight),
                       state_of(arc_a.next_state, arc_b.next_state, 0));
          }
        }
      } else {
        for (const Arc &arc_b : b.ArcsFrom(qb)) {
          if (arc_b.ilabel != arc_a.olabel) continue;
          out.AddArc(s, arc_a.ilabel, arc_b.olabel,
                     Times(arc_a.weight, arc_b.weight),
                     state_of(arc_a.next_state, arc_b.next_state, 0));
        }
      }
    }
    if (!use_filter || filter != 1) {
      for (const Arc &arc_b : b.ArcsFrom(qb)) {
        if (arc_b.ilabel != kEpsilon) continue;
        out.AddArc(s, kEpsilon, arc_b.olabel, arc_b.weight,
                   state_of(qa, arc_b.next_state, use_filter ? 2 : 0));
      }
    }
  }
  return Connect(out);
}

Wfst Connect(const Wfst &f) {
  Wfst out;
  out.SetInputSymbols(f.InputSymbols());
  out.SetOutputSymbols(f.OutputSymbols());
  if (f.Start() == kNoStateId) {
    out.Freeze();
    return out;
  }

  const StateId n = f.NumStates();
  std::vector<char> accessible(n, 0), coaccessible(n, 0);
  std::deque<StateId> queue;

  accessible[f.Start()] = 1;
  queue.push_back(f.Start());
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (const Arc &arc : f.ArcsFrom(s)) {
      if (!accessible[arc.next_state]) {
        accessible[arc.next_state] = 1;
        queue.push_back(arc.next_state);
      }
    }
  }

  std::vector<std::vector<StateId>> reverse(n);
  for (StateId s = 0; s < n; ++s)
    for (const Arc &arc : f.ArcsFrom(s)) reverse[arc.next_state].push_back(s);
  for (StateId s = 0; s < n; ++s) {
    if (f.IsFinal(s) && !coaccessible[s]) {
      coaccessible[s] = 1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (StateId p : reverse[s]) {
      if (!coaccessible[p]) {
        coaccessible[p] = 1;
        queue.push_back(p);
      }
    }
  }

  std::vector<StateId> new_id(n, kNoStateId);
  for (StateId s = 0; s < n; ++s)
    if (accessible[s] && coaccessible[s]) new_id[s] = out.AddState();
  if (new_id[f.Start()] == kNoStateId) {
    // Start cannot reach a final state: the language is empty.
    Wfst empty;
    empty.SetInputSymbols(f.InputSymbols());
    empty.SetOutputSymbols(f.OutputSymbols());
    empty.Freeze();
    return empty;
  }
  out.SetStart(new_id[f.Start()]);
  for (StateId s = 0; s < n; ++s) {
    if (new_id[s] == kNoStateId) continue;
    out.SetFinal(new_id[s], f.Final(s));
    for (const Arc &arc : f.ArcsFrom(s)) {
      if (new_id[arc.next_state] == kNoStateId) continue;
      out.AddArc(new_id[s], arc.ilabel, arc.olabel, arc.weight,
                 new_id[arc.next_state]);
    }
  }
  out.Freeze();
  return out;
}

namespace {

template <typename ArcPredicate>
std::vector<int32_t> RankBySubgraph(const Wfst &f, ArcPredicate in_subgraph) {
  const StateId n = f.NumStates();
  std::vector<int32_t> indegree(n, 0);
  for (StateId s = 0; s < n; ++s)
    for (const Arc &arc : f.ArcsFrom(s))
      if (in_subgraph(arc)) ++indegree[arc.next_state];

  std::vector<int32_t> rank(n, 0);
  std::deque<StateId> queue;
  for (StateId s = 0; s < n; ++s)
    if (indegree[s] == 0) queue.push_back(s);
  StateId processed = 0;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    ++processed;
    for (const Arc &arc : f.ArcsFrom(s)) {
      if (!in_subgraph(arc)) continue;
      rank[arc.next_state] = std::max(rank[arc.next_state], rank[s] + 1);
      if (--indegree[arc.next_state] == 0) queue.push_back(arc.next_state);
    }
  }
  if (processed != n) {
    for (StateId s = 0; s < n; ++s)
      if (indegree[s] > 0)
        CTCFST_ERR << "epsilon cycle with non-zero probability through state "
                   << s;
  }
  return rank;
}

}  // namespace

std::vector<int32_t> EpsilonRank(const Wfst &f) {
  return RankBySubgraph(f, IsLiveEpsilonArc);
}

std::vector<int32_t> InputEpsilonRank(const Wfst &f) {
  return RankBySubgraph(f, [](const Arc &arc) {
    return arc.ilabel == kEpsilon && arc.weight != kLogZero;
  });
}

Wfst RemoveEpsilon(const Wfst &f) {
  bool has_eps = false;
  for (StateId s = 0; s < f.NumStates() && !has_eps; ++s)
    for (const Arc &arc : f.ArcsFrom(s))
      if (arc.ilabel == kEpsilon && arc.olabel == kEpsilon) {
        has_eps = true;
        break;
      }
  if (!has_eps) {
    Wfst copy = f;
    copy.Freeze();
    return copy;
  }

  const std::vector<int32_t> rank = EpsilonRank(f);  // rejects epsilon cycles
  const StateId n = f.NumStates();
  std::vector<StateId> by_rank(n);
  for (StateId s = 0; s < n; ++s) by_rank[s] = s;
  std::stable_sort(by_rank.begin(), by_rank.end(),
                   [&](StateId x, StateId y) { return rank[x] < rank[y]; });

  Wfst out;
  out.SetInputSymbols(f.InputSymbols());
  out.SetOutputSymbols(f.OutputSymbols());
  for (StateId s = 0; s < n; ++s) out.AddState();
  out.SetStart(f.Start());

  // closure[t] = log-sum over all pure-epsilon paths s -> t, computed by
  // relaxing states in epsilon-topological order.
  std::vector<double> closure(n);
  for (StateId s = 0; s < n; ++s) {
    std::fill(closure.begin(), closure.end(), kLogZero);
    closure[s] = kLogOne;
    for (StateId t : by_rank) {
      if (closure[t] == kLogZero) continue;
      for (const Arc &arc : f.ArcsFrom(t))
        if (IsLiveEpsilonArc(arc))
          closure[arc.next_state] =
              LogAdd(closure[arc.next_state], Times(closure[t], arc.weight));
    }
    double final_weight = kLogZero;
    for (StateId t = 0; t < n; ++t) {
      if (closure[t] == kLogZero) continue;
      final_weight = LogAdd(final_weight, Times(closure[t], f.Final(t)));
      for (const Arc &arc : f.ArcsFrom(t)) {
        if (arc.ilabel == kEpsilon && arc.olabel == kEpsilon) continue;
        out.AddArc(s, arc.ilabel, arc.olabel, Times(closure[t], arc.weight),
                   arc.next_state);
      }
    }
    out.SetFinal(s, final_weight);
  }
  out.Freeze();
  return out;
}

namespace {

// Kahn's algorithm over all arcs; returns states in topological order or an
// empty vector if a cycle exists.  Ready states are taken smallest-id first
// so the renumbering is deterministic.
std::vector<StateId> TopologicalOrder(const Wfst &f) {
  const StateId n = f.NumStates();
  std::vector<int32_t> indegree(n, 0);
  for (StateId s = 0; s < n; ++s)
    for (const Arc &arc : f.ArcsFrom(s)) ++indegree[arc.next_state];
  std::priority_queue<StateId, std::vector<StateId>, std::greater<StateId>>
      ready;
  for (StateId s = 0; s < n; ++s)
    if (indegree[s] == 0) ready.push(s);
  std::vector<StateId> order;
  order.reserve(n);
  while (!ready.empty()) {
    StateId s = ready.top();
    ready.pop();
    order.push_back(s);
    for (const Arc &arc : f.ArcsFrom(s))
      if (--indegree[arc.next_state] == 0) ready.push(arc.next_state);
  }
  if (static_cast<StateId>(order.size()) != n) order.clear();
  return order;
}

std::string WitnessCycle(const Wfst &f) {
  // All remaining states after Kahn lie in or feed a cycle; walk successors
  // inside the remaining set until a state repeats.
  const StateId n = f.NumStates();
  std::vector<int32_t> indegree(n, 0);
  for (StateId s = 0; s < n; ++s)
    for (const Arc &arc : f.ArcsFrom(s)) ++indegree[arc.next_state];
  std::deque<StateId> queue;
  for (StateId s = 0; s < n; ++s)
    if (indegree[s] == 0) queue.push_back(s);
  std::vector<char> removed(n, 0);
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    removed[s] = 1;
    for (const Arc &arc : f.ArcsFrom(s))
      if (--indegree[arc.next_state] == 0) queue.push_back(arc.next_state);
  }
  StateId cursor = kNoStateId;
  for (StateId s = 0; s < n; ++s)
    if (!removed[s]) {
      cursor = s;
      break;
    }
  CTCFST_ASSERT(cursor != kNoStateId);
  std::vector<StateId> trail;
  std::vector<int32_t> seen_at(n, -1);
  while (seen_at[cursor] < 0) {
    seen_at[cursor] = static_cast<int32_t>(trail.size());
    trail.push_back(cursor);
    for (const Arc &arc : f.ArcsFrom(cursor)) {
      if (!removed[arc.next_state]) {
        cursor = arc.next_state;
        break;
      }
    }
  }
  std::ostringstream os;
  for (size_t i = seen_at[cursor]; i < trail.size(); ++i)
    os << trail[i] << " -> ";
  os << cursor;
  return os.str();
}

}  // namespace

bool IsAcyclic(const Wfst &f) {
  return f.NumStates() == 0 || !TopologicalOrder(f).empty();
}

Wfst TopologicalSort(const Wfst &f) {
  Wfst out;
  out.SetInputSymbols(f.InputSymbols());
  out.SetOutputSymbols(f.OutputSymbols());
  if (f.NumStates() == 0) {
    out.Freeze();
    return out;
  }
  std::vector<StateId> order = TopologicalOrder(f);
  if (order.empty())
    CTCFST_ERR << "topological sort: graph has a cycle: " << WitnessCycle(f);

  std::vector<StateId> new_id(f.NumStates());
  for (StateId i = 0; i < static_cast<StateId>(order.size()); ++i)
    new_id[order[i]] = i;
  for (StateId s = 0; s < f.NumStates(); ++s) out.AddState();
  if (f.Start() != kNoStateId) out.SetStart(new_id[f.Start()]);
  for (StateId s = 0; s < f.NumStates(); ++s) {
    out.SetFinal(new_id[s], f.Final(s));
    for (const Arc &arc : f.ArcsFrom(s))
      out.AddArc(new_id[s], arc.ilabel, arc.olabel, arc.weight,
                 new_id[arc.next_state]);
  }
  out.Freeze();
  return out;
}

}  // namespace ctcfst
