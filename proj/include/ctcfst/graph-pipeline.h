// ctcfst/graph-pipeline.h

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

#ifndef CTCFST_GRAPH_PIPELINE_H_
#define CTCFST_GRAPH_PIPELINE_H_

#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctcfst/fst.h"

namespace ctcfst {

// Straight-line acceptor for a unit sequence: |units|+1 states, one arc per
// unit, only the last state final.
Wfst BuildLinear(std::span<const Label> units);

struct Lexicon {
  struct Entry {
    std::string word;
    std::vector<Label> units;  // pronunciation as emission unit ids (>= 2)
  };
  std::vector<Entry> entries;
};

// Lexicon file lines: "word unit1 unit2 ..." with unit names resolved
// against `units`.  Blank lines are skipped.
Lexicon ReadLexicon(std::istream &is, const SymbolTable &units);
Lexicon ReadLexicon(const std::string &path, const SymbolTable &units);

// Word symbol table for a lexicon: <eps>=0 then words in file order.
std::shared_ptr<const SymbolTable> LexiconWords(const Lexicon &lex);

// L transducer: union of per-word linear graphs (units in, the word out on
// the entry arc), looped back to the start state so word sequences
// concatenate; start is final so the empty sequence passes through.
Wfst BuildLexiconFst(const Lexicon &lex, std::shared_ptr<const SymbolTable> units,
                     std::shared_ptr<const SymbolTable> words);

// Backoff-free bigram model over either words or units.  Histories are
// symbol strings, with "<s>" for sentence start; "</s>" as a successor holds
// the sentence-end probability.
struct BigramLm {
  std::vector<std::string> vocabulary;  // real symbols, insertion order
  // (history, successor) -> probability; history is "<s>" or a vocabulary
  // symbol, successor is "</s>" or a vocabulary symbol.
  std::map<std::pair<std::string, std::string>, double> probabilities;
};

// LM file lines: "history symbol probability".
BigramLm ReadBigramLm(std::istream &is);
BigramLm ReadBigramLm(const std::string &path);

// Every row (fixed history) must sum to 1 within `tolerance`.
void CheckNormalized(const BigramLm &lm, double tolerance = 1e-9);

// p(successor | history) = 1/(V+1) for every vocabulary symbol and </s>.
BigramLm UniformBigram(std::vector<std::string> vocabulary);

// Acceptor with one state per history (start plus one per symbol); arc
// weights are natural-log probabilities, final weights the sentence-end row
// entries.  `symbols` resolves vocabulary strings to arc labels.
Wfst BuildNgramFst(const BigramLm &lm,
                   std::shared_ptr<const SymbolTable> symbols);

// connect(compose(topo, compose(l, g))).  Also serves MMI denominators with
// g a unit-level LM and l an identity (or the LM composed directly).
Wfst BuildDecodingGraph(const Wfst &topo, const Wfst &l, const Wfst &g);

struct GraphStats {
  int64_t states = 0;
  int64_t arcs = 0;
  int64_t approx_bytes = 0;  // 16 bytes per arc + 8 per state
};

GraphStats ComputeGraphStats(const Wfst &f);

}  // namespace ctcfst

#endif  // CTCFST_GRAPH_PIPELINE_H_
