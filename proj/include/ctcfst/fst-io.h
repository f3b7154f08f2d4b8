// ctcfst/fst-io.h

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

#ifndef CTCFST_FST_IO_H_
#define CTCFST_FST_IO_H_

#include <iosfwd>
#include <string>

#include "ctcfst/fst.h"

namespace ctcfst {

// AT&T FSM text format.  Arc lines are "src dst ilabel olabel [cost]", final
// lines "state [cost]"; a missing cost means cost 0.  The first line's first
// field is the start state.  Costs are negated natural-log probabilities and
// are printed with shortest round-trip precision.
void WriteFstText(const Wfst &f, std::ostream &os);
void WriteFstText(const Wfst &f, const std::string &path);
Wfst ReadFstText(std::istream &is);
Wfst ReadFstText(const std::string &path);

// Symbol tables serialize as "symbol<TAB>id" lines, ids dense from 0.
void WriteSymbolTable(const SymbolTable &table, std::ostream &os);
void WriteSymbolTable(const SymbolTable &table, const std::string &path);
SymbolTable ReadSymbolTable(std::istream &is, const std::string &name = "");
SymbolTable ReadSymbolTable(const std::string &path);

// Shortest decimal form that round-trips to the same double ("0", "inf", ...).
std::string FormatDouble(double value);
// Locale-independent parse; accepts "inf"/"-inf". Fails on trailing garbage.
double ParseDouble(const std::string &token);

}  // namespace ctcfst

#endif  // CTCFST_FST_IO_H_
