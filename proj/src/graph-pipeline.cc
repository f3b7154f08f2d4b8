// ctcfst/graph-pipeline.cc

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

#include "ctcfst/graph-pipeline.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "ctcfst/fst-algo.h"
#include "ctcfst/fst-io.h"

namespace ctcfst {

Wfst BuildLinear(std::span<const Label> units) {
  if (units.empty()) CTCFST_ERR << "linear graph needs a non-empty sequence";
  Wfst f;
  f.ReserveStates(units.size() + 1);
  for (size_t i = 0; i <= units.size(); ++i) f.AddState();
  f.SetStart(0);
  f.SetFinal(static_cast<StateId>(units.size()), kLogOne);
  for (size_t i = 0; i < units.size(); ++i)
    f.AddArc(static_cast<StateId>(i), units[i], units[i], kLogOne,
             static_cast<StateId>(i + 1));
  f.Freeze();
  return f;
}

Lexicon ReadLexicon(std::istream &is, const SymbolTable &units) {
  Lexicon lex;
  std::set<std::pair<std::string, std::vector<Label>>> seen;
  std::string line;
  int64_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream tokens(line);
    Lexicon::Entry entry;
    if (!(tokens >> entry.word)) continue;
    std::string unit;
    while (tokens >> unit) {
      Label id = units.Find(unit);
      if (id < 0)
        CTCFST_ERR << "line " << line_no << ": unknown unit \"" << unit
                   << "\" in pronunciation of \"" << entry.word << "\"";
      if (id < 2)
        CTCFST_ERR << "line " << line_no << ": \"" << unit
                   << "\" cannot appear in a pronunciation";
      entry.units.push_back(id);
    }
    if (entry.units.empty())
      CTCFST_ERR << "line " << line_no << ": word \"" << entry.word
                 << "\" has an empty pronunciation";
    if (!seen.emplace(entry.word, entry.units).second)
      CTCFST_ERR << "line " << line_no << ": duplicate entry for word \""
                 << entry.word << "\"";
    lex.entries.push_back(std::move(entry));
  }
  return lex;
}

Lexicon ReadLexicon(const std::string &path, const SymbolTable &units) {
  std::ifstream is(path);
  if (!is) CTCFST_ERR << "cannot open \"" << path << "\"";
  return ReadLexicon(is, units);
}

std::shared_ptr<const SymbolTable> LexiconWords(const Lexicon &lex) {
  auto words = std::make_shared<SymbolTable>("words");
  words->AddSymbol("<eps>");
  for (const auto &entry : lex.entries) words->AddSymbol(entry.word);
  return words;
}

Wfst BuildLexiconFst(const Lexicon &lex,
                     std::shared_ptr<const SymbolTable> units,
                     std::shared_ptr<const SymbolTable> words) {
  if (lex.entries.empty()) CTCFST_ERR << "empty lexicon";
  Wfst l;
  l.SetInputSymbols(std::move(units));
  l.SetOutputSymbols(words);
  StateId start = l.AddState();
  l.SetStart(start);
  l.SetFinal(start, kLogOne);
  for (const auto &entry : lex.entries) {
    if (entry.units.empty())
      CTCFST_ERR << "word \"" << entry.word << "\" has an empty pronunciation";
    Label word_id = words->Find(entry.word);
    CTCFST_ASSERT(word_id > 0);
    StateId prev = start;
    for (size_t i = 0; i < entry.units.size(); ++i) {
      bool last = i + 1 == entry.units.size();
      StateId next = last ? start : l.AddState();
      l.AddArc(prev, entry.units[i], i == 0 ? word_id : kEpsilon, kLogOne,
               next);
      prev = next;
    }
  }
  l.Freeze();
  return l;
}

BigramLm ReadBigramLm(std::istream &is) {
  BigramLm lm;
  std::set<std::string> vocab_seen;
  auto note_symbol = [&](const std::string &symbol) {
    if (symbol == "<s>" || symbol == "</s>") return;
    if (vocab_seen.insert(symbol).second) lm.vocabulary.push_back(symbol);
  };
  std::string line;
  int64_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string history, symbol, prob_token;
    if (!(tokens >> history)) continue;
    if (!(tokens >> symbol >> prob_token))
      CTCFST_ERR << "line " << line_no
                 << ": expected \"history symbol probability\"";
    std::string extra;
    if (tokens >> extra)
      CTCFST_ERR << "line " << line_no << ": trailing field \"" << extra
                 << "\"";
    double p = ParseDouble(prob_token);
    if (!(p >= 0.0 && p <= 1.0 + 1e-12))
      CTCFST_ERR << "line " << line_no << ": probability " << prob_token
                 << " outside [0, 1]";
    if (history == "</s>")
      CTCFST_ERR << "line " << line_no << ": \"</s>\" cannot be a history";
    if (symbol == "<s>")
      CTCFST_ERR << "line " << line_no << ": \"<s>\" cannot be predicted";
    if (!lm.probabilities.emplace(std::make_pair(history, symbol), p).second)
      CTCFST_ERR << "line " << line_no << ": duplicate entry for (" << history
                 << ", " << symbol << ")";
    note_symbol(history);
    note_symbol(symbol);
  }
  return lm;
}

BigramLm ReadBigramLm(const std::string &path) {
  std::ifstream is(path);
  if (!is) CTCFST_ERR << "cannot open \"" << path << "\"";
  return ReadBigramLm(is);
}

void CheckNormalized(const BigramLm &lm, double tolerance) {
  std::map<std::string, double> row_sums;
  for (const auto &[key, p] : lm.probabilities) row_sums[key.first] += p;
  for (const auto &[history, sum] : row_sums)
    if (std::fabs(sum - 1.0) > tolerance)
      CTCFST_ERR << "bigram row for history \"" << history << "\" sums to "
                 << sum << ", expected 1";
}

BigramLm UniformBigram(std::vector<std::string> vocabulary) {
  BigramLm lm;
  lm.vocabulary = std::move(vocabulary);
  double p = 1.0 / (static_cast<double>(lm.vocabulary.size()) + 1.0);
  std::vector<std::string> histories = {"<s>"};
  histories.insert(histories.end(), lm.vocabulary.begin(),
                   lm.vocabulary.end());
  for (const auto &history : histories) {
    for (const auto &symbol : lm.vocabulary)
      lm.probabilities[{history, symbol}] = p;
    lm.probabilities[{history, "</s>"}] = p;
  }
  return lm;
}

Wfst BuildNgramFst(const BigramLm &lm,
                   std::shared_ptr<const SymbolTable> symbols) {
  CheckNormalized(lm);
  Wfst g;
  g.SetInputSymbols(symbols);
  g.SetOutputSymbols(symbols);
  StateId start = g.AddState();  // the "<s>" history
  g.SetStart(start);
  std::map<std::string, StateId> history_state = {{"<s>", start}};
  for (const auto &symbol : lm.vocabulary)
    history_state.emplace(symbol, g.AddState());
  for (const auto &[key, p] : lm.probabilities) {
    if (p == 0.0) continue;  // a zero-probability successor is simply absent
    const auto &[history, symbol] = key;
    auto it = history_state.find(history);
    CTCFST_ASSERT(it != history_state.end());
    if (symbol == "</s>") {
      g.SetFinal(it->second, std::log(p));
      continue;
    }
    Label label = symbols->Find(symbol);
    if (label < 0)
      CTCFST_ERR << "bigram symbol \"" << symbol
                 << "\" missing from symbol table \"" << symbols->Name()
                 << "\"";
    g.AddArc(it->second, label, label, std::log(p), history_state.at(symbol));
  }
  g.Freeze();
  return g;
}

Wfst BuildDecodingGraph(const Wfst &topo, const Wfst &l, const Wfst &g) {
  return Connect(Compose(topo, Compose(l, g)));
}

GraphStats ComputeGraphStats(const Wfst &f) {
  GraphStats stats;
  stats.states = f.NumStates();
  stats.arcs = f.NumArcs();
  stats.approx_bytes = 16 * stats.arcs + 8 * stats.states;
  return stats;
}

}  // namespace ctcfst
