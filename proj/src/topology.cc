// ctcfst/topology.cc

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

#include "ctcfst/topology.h"

#include <memory>

namespace ctcfst {

namespace {

// Emission id of language unit state u (1-based unit index): <eps>=0,
// <blank>=1, units from 2.
constexpr Label UnitId(int32_t u) { return static_cast<Label>(u + 1); }

Wfst BuildCorrect(int32_t n) {
  // One state per unit including <blank> (state 0), complete digraph.
  // A self-loop keeps emitting the same unit, so it outputs epsilon; an arc
  // into another unit's state consumes and outputs that unit (epsilon when
  // entering the <blank> state).  Every state may end the utterance.
  Wfst t;
  for (int32_t s = 0; s < n; ++s) {
    t.AddState();
    t.SetFinal(s, kLogOne);
  }
  t.SetStart(0);
  for (int32_t src = 0; src < n; ++src) {
    for (int32_t dst = 0; dst < n; ++dst) {
      Label unit = UnitId(dst);
      Label out = (dst == src || dst == 0) ? kEpsilon : unit;
      t.AddArc(src, unit, out, kLogOne, dst);
    }
  }
  return t;
}

Wfst BuildCompact(int32_t n, TopologyMode mode) {
  // Single <blank> hub (state 0); entering unit u's state outputs u, staying
  // re-emits u as epsilon, and one return arc per unit leads back to the hub.
  // The return is a pure epsilon move in decode mode; in train mode it
  // consumes the emulation unit (emission id n+1) so a doubled emission
  // matrix can schedule it.  Paths end at the hub, so a trailing unit run is
  // followed by its (free) return move.
  Wfst t;
  for (int32_t s = 0; s < n; ++s) t.AddState();
  t.SetStart(0);
  t.SetFinal(0, kLogOne);
  Label return_label =
      mode == TopologyMode::kTrain ? static_cast<Label>(n + 1) : kEpsilon;
  t.AddArc(0, kBlank, kEpsilon, kLogOne, 0);
  for (int32_t u = 1; u < n; ++u) {
    Label unit = UnitId(u);
    t.AddArc(0, unit, unit, kLogOne, u);
    t.AddArc(u, unit, kEpsilon, kLogOne, u);
    t.AddArc(u, return_label, kEpsilon, kLogOne, 0);
  }
  return t;
}

Wfst BuildMinimal(int32_t n) {
  Wfst t;
  t.AddState();
  t.SetStart(0);
  t.SetFinal(0, kLogOne);
  t.AddArc(0, kBlank, kEpsilon, kLogOne, 0);
  for (int32_t u = 1; u < n; ++u)
    t.AddArc(0, UnitId(u), UnitId(u), kLogOne, 0);
  return t;
}

Wfst BuildEesen(int32_t n) {
  // Rest hub R (start/final) with epsilon loop-backs, a <blank> run state B,
  // and a unit dispatch state E wrapping the N-1 unit states:
  //
  //   R --<blank>:eps--> B   (first <blank> of a run; B may end the path)
  //   B --<blank>:eps--> B   (run continues)
  //   B --eps--> E           (after a <blank> run only units may follow,
  //   R --eps--> E            which keeps <blank> runs from splitting)
  //   E --u:u--> s_u, s_u --u:eps--> s_u, s_u --eps--> R   (per unit)
  //
  // Per frame string, paths pair off one-to-one with compact's: <blank> runs
  // have a single consumption, unit runs may split at the epsilon loop-back
  // exactly as compact's hub returns allow.
  constexpr StateId kRest = 0, kBlankRun = 1, kDispatch = 2;
  Wfst t;
  for (int32_t s = 0; s < n + 2; ++s) t.AddState();
  t.SetStart(kRest);
  t.SetFinal(kRest, kLogOne);
  t.SetFinal(kBlankRun, kLogOne);
  t.AddArc(kRest, kBlank, kEpsilon, kLogOne, kBlankRun);
  t.AddArc(kBlankRun, kBlank, kEpsilon, kLogOne, kBlankRun);
  t.AddArc(kBlankRun, kEpsilon, kEpsilon, kLogOne, kDispatch);
  t.AddArc(kRest, kEpsilon, kEpsilon, kLogOne, kDispatch);
  for (int32_t u = 1; u < n; ++u) {
    StateId unit_state = kDispatch + u;
    Label unit = UnitId(u);
    t.AddArc(kDispatch, unit, unit, kLogOne, unit_state);
    t.AddArc(unit_state, unit, kEpsilon, kLogOne, unit_state);
    t.AddArc(unit_state, kEpsilon, kEpsilon, kLogOne, kRest);
  }
  return t;
}

}  // namespace

int32_t EmissionUnits(const TopologySpec &spec) {
  bool emulation = spec.kind == TopologyKind::kCompact &&
                   spec.mode == TopologyMode::kTrain;
  return spec.n_units + (emulation ? 1 : 0);
}

Wfst BuildTopology(const TopologySpec &spec) {
  if (spec.n_units < 1)
    CTCFST_ERR << "topology needs at least the <blank> unit, got n_units = "
               << spec.n_units;
  if (spec.selfless && spec.kind == TopologyKind::kMinimal)
    CTCFST_ERR << "minimal has no selfless variant";

  Wfst t;
  switch (spec.kind) {
    case TopologyKind::kCorrect:
      t = BuildCorrect(spec.n_units);
      break;
    case TopologyKind::kEesen:
      t = BuildEesen(spec.n_units);
      break;
    case TopologyKind::kCompact:
      t = BuildCompact(spec.n_units, spec.mode);
      break;
    case TopologyKind::kMinimal:
      t = BuildMinimal(spec.n_units);
      break;
  }
  bool emulation = spec.kind == TopologyKind::kCompact &&
                   spec.mode == TopologyMode::kTrain;
  t.SetInputSymbols(std::make_shared<SymbolTable>(
      SymbolTable::Units(spec.n_units, emulation)));
  t.SetOutputSymbols(
      std::make_shared<SymbolTable>(SymbolTable::Units(spec.n_units)));
  t.Freeze();
  if (spec.selfless) return MakeSelfless(t);
  return t;
}

Wfst MakeSelfless(const Wfst &topology) {
  for (StateId s = 0; s < topology.NumStates(); ++s)
    for (const Arc &arc : topology.ArcsFrom(s))
      if (arc.next_state == s && arc.olabel != kEpsilon)
        CTCFST_ERR << "unit:unit self-loop at state " << s
                   << ": minimal-style topologies have no selfless variant";

  Wfst out;
  out.SetInputSymbols(topology.InputSymbols());
  out.SetOutputSymbols(topology.OutputSymbols());
  for (StateId s = 0; s < topology.NumStates(); ++s) out.AddState();
  out.SetStart(topology.Start());
  for (StateId s = 0; s < topology.NumStates(); ++s) {
    out.SetFinal(s, topology.Final(s));
    for (const Arc &arc : topology.ArcsFrom(s)) {
      bool unit_self_loop = arc.next_state == s && arc.olabel == kEpsilon &&
                            arc.ilabel != kEpsilon && arc.ilabel != kBlank;
      if (unit_self_loop) continue;
      out.AddArc(s, arc);
    }
  }
  out.Freeze();
  return out;
}

TopologyKind ParseTopologyKind(const std::string &name) {
  if (name == "correct") return TopologyKind::kCorrect;
  if (name == "eesen") return TopologyKind::kEesen;
  if (name == "compact") return TopologyKind::kCompact;
  if (name == "minimal") return TopologyKind::kMinimal;
  CTCFST_ERR << "unknown topology \"" << name
             << "\" (expected correct, eesen, compact, or minimal)";
}

std::string TopologyKindName(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::kCorrect:
      return "correct";
    case TopologyKind::kEesen:
      return "eesen";
    case TopologyKind::kCompact:
      return "compact";
    case TopologyKind::kMinimal:
      return "minimal";
  }
  CTCFST_ASSERT(false);
  return {};
}

}  // namespace ctcfst
