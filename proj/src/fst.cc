// ctcfst/fst.cc

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

#include "ctcfst/fst.h"

namespace ctcfst {

Label SymbolTable::AddSymbol(const std::string &symbol) {
  auto it = ids_.find(symbol);
  if (it != ids_.end()) return it->second;
  Label id = Size();
  symbols_.push_back(symbol);
  ids_.emplace(symbol, id);
  return id;
}

Label SymbolTable::Find(const std::string &symbol) const {
  auto it = ids_.find(symbol);
  return it == ids_.end() ? -1 : it->second;
}

const std::string &SymbolTable::Find(Label id) const {
  if (!Contains(id))
    CTCFST_ERR << "symbol id " << id << " out of range in table \"" << name_
               << "\" of size " << Size();
  return symbols_[id];
}

std::string SymbolTable::SpreadsheetName(int32_t index) {
  CTCFST_ASSERT(index >= 0);
  std::string name;
  int32_t n = index;
  for (;;) {
    name.insert(name.begin(), static_cast<char>('A' + n % 26));
    n = n / 26 - 1;
    if (n < 0) break;
  }
  return name;
}

SymbolTable SymbolTable::Units(int32_t n_units, bool with_emulation) {
  if (n_units < 1) CTCFST_ERR << "unit table needs n_units >= 1, got " << n_units;
  SymbolTable table("units");
  table.AddSymbol("<eps>");
  table.AddSymbol("<blank>");
  for (int32_t u = 0; u < n_units - 1; ++u)
    table.AddSymbol(SpreadsheetName(u));
  if (with_emulation) table.AddSymbol("<emul>");
  return table;
}

bool Wfst::HasEpsilonInput() const {
  for (const auto &state_arcs : arcs_)
    for (const Arc &arc : state_arcs)
      if (arc.ilabel == kEpsilon) return true;
  return false;
}

bool Wfst::HasEpsilonOutput() const {
  for (const auto &state_arcs : arcs_)
    for (const Arc &arc : state_arcs)
      if (arc.olabel == kEpsilon) return true;
  return false;
}

}  // namespace ctcfst
