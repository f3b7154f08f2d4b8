// ctcfst/fst.h

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

#ifndef CTCFST_FST_H_
#define CTCFST_FST_H_

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctcfst/common.h"
#include "ctcfst/semiring.h"

namespace ctcfst {

// Bidirectional symbol <-> dense-id map.  Id 0 is conventionally "<eps>";
// emission tables additionally reserve id 1 for "<blank>".
class SymbolTable {
 public:
  SymbolTable() = default;
  explicit SymbolTable(std::string name) : name_(std::move(name)) {}

  // Returns the id of `symbol`, adding it with the next free id if absent.
  Label AddSymbol(const std::string &symbol);
  // -1 if the symbol is absent.
  Label Find(const std::string &symbol) const;
  const std::string &Find(Label id) const;  // throws on out-of-range id
  bool Contains(Label id) const { return id >= 0 && id < Size(); }
  Label Size() const { return static_cast<Label>(symbols_.size()); }
  const std::string &Name() const { return name_; }

  // Equality is over the id -> symbol mapping; the table name is metadata.
  friend bool operator==(const SymbolTable &a, const SymbolTable &b) {
    return a.symbols_ == b.symbols_;
  }

  // "A", "B", ..., "Z", "AA", "AB", ... (bijective base-26).
  static std::string SpreadsheetName(int32_t index);

  // Emission-symbol table for N units including <blank>:
  // <eps>=0, <blank>=1, then N-1 spreadsheet-named language units.
  // When `with_emulation` is set, one extra unit "<emul>" gets id N+1.
  static SymbolTable Units(int32_t n_units, bool with_emulation = false);

 private:
  std::string name_;
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Label> ids_;
};

struct Arc {
  Label ilabel = kEpsilon;
  Label olabel = kEpsilon;
  double weight = kLogOne;  // natural-log probability
  StateId next_state = kNoStateId;
};

inline bool operator==(const Arc &a, const Arc &b) {
  return a.ilabel == b.ilabel && a.olabel == b.olabel &&
         a.weight == b.weight && a.next_state == b.next_state;
}

// Weighted finite-state transducer over the log/tropical semiring pair.
// Built through the mutating interface, then frozen; every algebra operation
// takes frozen inputs and returns a new frozen graph, so frozen instances can
// be shared freely across threads.
class Wfst {
 public:
  StateId AddState() {
    CheckMutable();
    arcs_.emplace_back();
    finals_.push_back(kLogZero);
    return static_cast<StateId>(arcs_.size()) - 1;
  }
  void ReserveStates(size_t n) {
    arcs_.reserve(n);
    finals_.reserve(n);
  }
  void SetStart(StateId s) {
    CheckMutable();
    CTCFST_ASSERT(ValidState(s));
    start_ = s;
  }
  void SetFinal(StateId s, double weight = kLogOne) {
    CheckMutable();
    CTCFST_ASSERT(ValidState(s));
    finals_[s] = weight;
  }
  void AddArc(StateId src, const Arc &arc) {
    CheckMutable();
    CTCFST_ASSERT(ValidState(src) && ValidState(arc.next_state));
    arcs_[src].push_back(arc);
  }
  void AddArc(StateId src, Label ilabel, Label olabel, double weight,
              StateId next_state) {
    AddArc(src, Arc{ilabel, olabel, weight, next_state});
  }

  void Freeze() { frozen_ = true; }
  bool IsFrozen() const { return frozen_; }

  StateId Start() const { return start_; }
  StateId NumStates() const { return static_cast<StateId>(arcs_.size()); }
  int64_t NumArcs() const {
    int64_t n = 0;
    for (const auto &a : arcs_) n += static_cast<int64_t>(a.size());
    return n;
  }
  bool ValidState(StateId s) const { return s >= 0 && s < NumStates(); }
  double Final(StateId s) const {
    CTCFST_ASSERT(ValidState(s));
    return finals_[s];
  }
  bool IsFinal(StateId s) const { return Final(s) != kLogZero; }
  const std::vector<Arc> &ArcsFrom(StateId s) const {
    CTCFST_ASSERT(ValidState(s));
    return arcs_[s];
  }

  bool HasEpsilonInput() const;   // any arc with ilabel == 0
  bool HasEpsilonOutput() const;  // any arc with olabel == 0

  void SetInputSymbols(std::shared_ptr<const SymbolTable> t) {
    isymbols_ = std::move(t);
  }
  void SetOutputSymbols(std::shared_ptr<const SymbolTable> t) {
    osymbols_ = std::move(t);
  }
  const std::shared_ptr<const SymbolTable> &InputSymbols() const {
    return isymbols_;
  }
  const std::shared_ptr<const SymbolTable> &OutputSymbols() const {
    return osymbols_;
  }

 private:
  void CheckMutable() const { CTCFST_ASSERT(!frozen_); }

  StateId start_ = kNoStateId;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<double> finals_;  // kLogZero where non-final
  bool frozen_ = false;
  std::shared_ptr<const SymbolTable> isymbols_;
  std::shared_ptr<const SymbolTable> osymbols_;
};

}  // namespace ctcfst

#endif  // CTCFST_FST_H_
