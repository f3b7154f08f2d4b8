// ctcfst/fst-io.cc

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

#include "ctcfst/fst-io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace ctcfst {

std::string FormatDouble(double value) {
  if (value == 0.0) return "0";  // avoid "-0"
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  CTCFST_ASSERT(ec == std::errc());
  return std::string(buf, ptr);
}

double ParseDouble(const std::string &token) {
  double value = 0;
  const char *first = token.data();
  const char *last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    CTCFST_ERR << "malformed number \"" << token << "\"";
  return value;
}

namespace {

int64_t ParseId(const std::string &token, const char *what, int64_t line_no) {
  int64_t value = 0;
  const char *first = token.data();
  const char *last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0)
    CTCFST_ERR << "line " << line_no << ": malformed " << what << " \""
               << token << "\"";
  return value;
}

std::string CostString(double weight) {
  // weight is a log-probability; serialize as a cost (negated).
  if (weight == kLogZero) return "inf";
  return FormatDouble(-weight);
}

double WeightFromCost(const std::string &token, int64_t line_no) {
  double cost;
  try {
    cost = ParseDouble(token);
  } catch (const DataError &) {
    CTCFST_ERR << "line " << line_no << ": malformed cost \"" << token << "\"";
  }
  if (std::isnan(cost)) CTCFST_ERR << "line " << line_no << ": NaN cost";
  return cost == 0.0 ? kLogOne : -cost;
}

void WriteArcs(const Wfst &f, StateId s, std::ostream &os) {
  for (const Arc &arc : f.ArcsFrom(s)) {
    os << s << ' ' << arc.next_state << ' ' << arc.ilabel << ' ' << arc.olabel;
    if (arc.weight != kLogOne) os << ' ' << CostString(arc.weight);
    os << '\n';
  }
}

}  // namespace

void WriteFstText(const Wfst &f, std::ostream &os) {
  if (f.Start() == kNoStateId) return;
  const StateId start = f.Start();
  // The reader takes the start state from the first line.
  bool start_final_written = false;
  if (f.ArcsFrom(start).empty() && f.IsFinal(start)) {
    os << start;
    if (f.Final(start) != kLogOne) os << ' ' << CostString(f.Final(start));
    os << '\n';
    start_final_written = true;
  } else {
    WriteArcs(f, start, os);
  }
  for (StateId s = 0; s < f.NumStates(); ++s)
    if (s != start) WriteArcs(f, s, os);
  for (StateId s = 0; s < f.NumStates(); ++s) {
    if (!f.IsFinal(s) || (s == start && start_final_written)) continue;
    os << s;
    if (f.Final(s) != kLogOne) os << ' ' << CostString(f.Final(s));
    os << '\n';
  }
}

void WriteFstText(const Wfst &f, const std::string &path) {
  std::ofstream os(path);
  if (!os) CTCFST_ERR << "cannot open \"" << path << "\" for writing";
  WriteFstText(f, os);
  if (!os) CTCFST_ERR << "error writing \"" << path << "\"";
}

Wfst ReadFstText(std::istream &is) {
  Wfst f;
  auto ensure_state = [&f](int64_t s, int64_t line_no) {
    if (s > 4'000'000'000LL)
      CTCFST_ERR << "line " << line_no << ": state id " << s << " too large";
    while (f.NumStates() <= s) f.AddState();
    return static_cast<StateId>(s);
  };

  std::string line;
  int64_t line_no = 0;
  bool saw_first = false;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    std::string token;
    while (tokens >> token) fields.push_back(token);
    if (fields.empty()) continue;

    StateId src = ensure_state(ParseId(fields[0], "state id", line_no), line_no);
    if (!saw_first) {
      f.SetStart(src);
      saw_first = true;
    }
    switch (fields.size()) {
      case 1:
        f.SetFinal(src, kLogOne);
        break;
      case 2:
        f.SetFinal(src, WeightFromCost(fields[1], line_no));
        break;
      case 4:
      case 5: {
        StateId dst =
            ensure_state(ParseId(fields[1], "state id", line_no), line_no);
        Label ilabel =
            static_cast<Label>(ParseId(fields[2], "input label", line_no));
        Label olabel =
            static_cast<Label>(ParseId(fields[3], "output label", line_no));
        double weight = fields.size() == 5
                            ? WeightFromCost(fields[4], line_no)
                            : kLogOne;
        f.AddArc(src, ilabel, olabel, weight, dst);
        break;
      }
      default:
        CTCFST_ERR << "line " << line_no << ": expected 1, 2, 4, or 5 fields, got "
                   << fields.size();
    }
  }
  f.Freeze();
  return f;
}

Wfst ReadFstText(const std::string &path) {
  std::ifstream is(path);
  if (!is) CTCFST_ERR << "cannot open \"" << path << "\"";
  return ReadFstText(is);
}

void WriteSymbolTable(const SymbolTable &table, std::ostream &os) {
  for (Label id = 0; id < table.Size(); ++id)
    os << table.Find(id) << '\t' << id << '\n';
}

void WriteSymbolTable(const SymbolTable &table, const std::string &path) {
  std::ofstream os(path);
  if (!os) CTCFST_ERR << "cannot open \"" << path << "\" for writing";
  WriteSymbolTable(table, os);
  if (!os) CTCFST_ERR << "error writing \"" << path << "\"";
}

SymbolTable ReadSymbolTable(std::istream &is, const std::string &name) {
  SymbolTable table(name);
  std::string line;
  int64_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string symbol, id_token;
    if (!(tokens >> symbol)) continue;
    if (!(tokens >> id_token))
      CTCFST_ERR << "line " << line_no << ": missing id for symbol \""
                 << symbol << "\"";
    std::string extra;
    if (tokens >> extra)
      CTCFST_ERR << "line " << line_no << ": trailing field \"" << extra
                 << "\"";
    int64_t id = ParseId(id_token, "symbol id", line_no);
    if (table.Find(symbol) >= 0)
      CTCFST_ERR << "line " << line_no << ": duplicate symbol \"" << symbol
                 << "\"";
    Label assigned = table.AddSymbol(symbol);
    if (assigned != id)
      CTCFST_ERR << "line " << line_no << ": symbol ids must be dense and "
                 << "ascending from 0; expected " << assigned << ", got " << id;
  }
  return table;
}

SymbolTable ReadSymbolTable(const std::string &path) {
  std::ifstream is(path);
  if (!is) CTCFST_ERR << "cannot open \"" << path << "\"";
  return ReadSymbolTable(is, path);
}

}  // namespace ctcfst
