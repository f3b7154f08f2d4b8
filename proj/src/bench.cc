// ctcfst/bench.cc

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

#include "ctcfst/bench.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <random>
#include <sstream>

#include "ctcfst/decoder.h"
#include "ctcfst/fst-io.h"

namespace ctcfst {

namespace {

std::string WordName(int32_t index, int32_t total) {
  std::string digits = std::to_string(index);
  std::string width = std::to_string(total);
  return "w" + std::string(width.size() - digits.size(), '0') + digits;
}

std::string FormatFixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Fixture {
  std::shared_ptr<const SymbolTable> units;
  std::shared_ptr<const SymbolTable> words;
  Wfst l;
  Wfst g;
};

Fixture BuildFixture(const BenchConfig &config, int32_t n) {
  Fixture fx;
  fx.units = std::make_shared<SymbolTable>(SymbolTable::Units(n, false));
  Lexicon lex =
      config.lexicon_path.empty()
          ? SynthesizeLexicon(n, config.num_words, config.seed + 1000003ull * n)
          : ReadLexicon(config.lexicon_path, *fx.units);
  fx.words = LexiconWords(lex);
  fx.l = BuildLexiconFst(lex, fx.units, fx.words);
  std::vector<std::string> vocabulary;
  for (Label id = 1; id < static_cast<Label>(fx.words->Size()); ++id)
    vocabulary.push_back(fx.words->Find(id));
  BigramLm lm =
      config.lm_path.empty()
          ? SynthesizeBigram(vocabulary, config.seed + 1000003ull * n + 1)
          : ReadBigramLm(config.lm_path);
  fx.g = BuildNgramFst(lm, fx.words);
  return fx;
}

void ValidateConfig(const BenchConfig &config) {
  if (config.vocab_sizes.empty())
    CTCFST_ERR << "bench needs at least one vocabulary size";
  if (config.topologies.empty())
    CTCFST_ERR << "bench needs at least one topology";
  for (int32_t n : config.vocab_sizes)
    if (n < 2) CTCFST_ERR << "vocabulary size " << n << " has no units";
}

void MaybeWriteCsv(const std::string &path, const std::string &csv) {
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) CTCFST_ERR << "cannot write \"" << path << "\"";
  os << csv;
}

std::string StatsColumns(const GraphStats &stats) {
  std::ostringstream os;
  os << stats.states << ',' << stats.arcs << ',' << stats.approx_bytes;
  return os.str();
}

}  // namespace

Lexicon SynthesizeLexicon(int32_t n_units, int32_t num_words, uint64_t seed) {
  if (n_units < 2) CTCFST_ERR << "a lexicon needs at least one language unit";
  if (num_words < 1) CTCFST_ERR << "a lexicon needs at least one word";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int32_t> length(1, 4);
  std::uniform_int_distribution<Label> unit(2, n_units);
  Lexicon lex;
  lex.entries.reserve(num_words);
  for (int32_t w = 1; w <= num_words; ++w) {
    Lexicon::Entry entry;
    entry.word = WordName(w, num_words);
    int32_t len = length(rng);
    for (int32_t i = 0; i < len; ++i) entry.units.push_back(unit(rng));
    lex.entries.push_back(std::move(entry));
  }
  return lex;
}

BigramLm SynthesizeBigram(const std::vector<std::string> &vocabulary,
                          uint64_t seed) {
  if (vocabulary.empty()) CTCFST_ERR << "a bigram needs a vocabulary";
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mass(0.5, 1.5);
  BigramLm lm;
  lm.vocabulary = vocabulary;
  std::vector<std::string> histories = {"<s>"};
  histories.insert(histories.end(), vocabulary.begin(), vocabulary.end());
  std::vector<std::string> successors = vocabulary;
  successors.push_back("</s>");
  for (const auto &history : histories) {
    std::vector<double> weights(successors.size());
    double total = 0.0;
    for (double &w : weights) total += (w = mass(rng));
    for (size_t i = 0; i < successors.size(); ++i)
      lm.probabilities[{history, successors[i]}] = weights[i] / total;
  }
  return lm;
}

DenseEmissions SynthesizeEmissions(int32_t frames, int32_t units,
                                   uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> score(0.0, 2.0);
  DenseEmissions em;
  em.frames = frames;
  em.units = units;
  em.values.resize(static_cast<size_t>(frames) * units);
  for (double &v : em.values) v = score(rng);
  NormalizeRows(em);
  return em;
}

std::string RunSizesBench(const BenchConfig &config) {
  ValidateConfig(config);

  struct Row {
    TopologyKind kind;
    GraphStats stats;
    double seconds;
  };
  auto sweep = [&config](int32_t n) {
    Fixture fx = BuildFixture(config, n);
    std::vector<Row> rows;
    for (TopologyKind kind : config.topologies) {
      auto start = Clock::now();
      Wfst topo = BuildTopology({kind, n, false, TopologyMode::kDecode});
      Wfst tlg = BuildDecodingGraph(topo, fx.l, fx.g);
      rows.push_back({kind, ComputeGraphStats(tlg), SecondsSince(start)});
    }
    return rows;
  };

  std::vector<std::future<std::vector<Row>>> futures;
  futures.reserve(config.vocab_sizes.size());
  for (int32_t n : config.vocab_sizes)
    futures.push_back(std::async(std::launch::async, sweep, n));
  std::vector<std::vector<Row>> sweeps;
  sweeps.reserve(futures.size());
  for (auto &f : futures) sweeps.push_back(f.get());

  std::ostringstream os;
  os << "# seed=" << config.seed << '\n';
  for (size_t i = 0; i < sweeps.size(); ++i) {
    const Row *correct = nullptr;
    const Row *compact = nullptr;
    for (const Row &row : sweeps[i]) {
      if (row.kind == TopologyKind::kCorrect) correct = &row;
      if (row.kind == TopologyKind::kCompact) compact = &row;
    }
    if (correct && compact)
      os << "# compact_correct_arc_ratio_N" << config.vocab_sizes[i] << '='
         << FormatFixed(static_cast<double>(compact->stats.arcs) /
                        static_cast<double>(correct->stats.arcs))
         << '\n';
  }
  os << "topology,N,states,arcs,approx_bytes,build_seconds\n";
  for (size_t i = 0; i < sweeps.size(); ++i)
    for (const Row &row : sweeps[i])
      os << TopologyKindName(row.kind) << ',' << config.vocab_sizes[i] << ','
         << StatsColumns(row.stats) << ',' << FormatFixed(row.seconds) << '\n';

  std::string csv = os.str();
  MaybeWriteCsv(config.out_csv, csv);
  return csv;
}

std::string RunDecodeBench(const BenchConfig &config) {
  ValidateConfig(config);
  if (config.num_utterances < 1)
    CTCFST_ERR << "decode bench needs at least one utterance";
  if (config.num_frames < 1)
    CTCFST_ERR << "decode bench needs at least one frame";

  std::ostringstream body;
  int64_t paired = 0;
  int64_t agreed = 0;
  bool have_pair = false;
  for (size_t ni = 0; ni < config.vocab_sizes.size(); ++ni) {
    int32_t n = config.vocab_sizes[ni];
    Fixture fx = BuildFixture(config, n);
    std::vector<DenseEmissions> utts;
    utts.reserve(config.num_utterances);
    for (int32_t u = 0; u < config.num_utterances; ++u)
      utts.push_back(SynthesizeEmissions(
          config.num_frames, n, config.seed + 1000003ull * n + 7919ull * (u + 1)));

    std::map<TopologyKind, std::vector<std::vector<Label>>> hyp_words;
    for (TopologyKind kind : config.topologies) {
      auto start = Clock::now();
      Wfst topo = BuildTopology({kind, n, false, TopologyMode::kDecode});
      Wfst tlg = BuildDecodingGraph(topo, fx.l, fx.g);
      double build_seconds = SecondsSince(start);
      std::string prefix = TopologyKindName(kind) + "," + std::to_string(n) +
                           "," + StatsColumns(ComputeGraphStats(tlg)) + "," +
                           FormatFixed(build_seconds);
      auto &words = hyp_words[kind];
      for (int32_t u = 0; u < config.num_utterances; ++u) {
        auto decode_start = Clock::now();
        Hypothesis hyp = ViterbiDecode(tlg, utts[u], config.decode_beam);
        double decode_seconds = SecondsSince(decode_start);
        words.push_back(hyp.words);
        body << prefix << ',' << u << ',' << FormatDouble(hyp.score) << ','
             << FormatFixed(decode_seconds) << '\n';
      }
    }
    auto correct_it = hyp_words.find(TopologyKind::kCorrect);
    auto compact_it = hyp_words.find(TopologyKind::kCompact);
    if (correct_it != hyp_words.end() && compact_it != hyp_words.end()) {
      have_pair = true;
      for (int32_t u = 0; u < config.num_utterances; ++u) {
        ++paired;
        if (correct_it->second[u] == compact_it->second[u]) ++agreed;
      }
    }
  }

  std::ostringstream os;
  os << "# seed=" << config.seed << '\n';
  if (have_pair)
    os << "# agreement_compact_correct="
       << FormatFixed(static_cast<double>(agreed) /
                      static_cast<double>(paired))
       << '\n';
  os << "topology,N,states,arcs,approx_bytes,build_seconds,utt,score,"
        "decode_seconds\n"
     << body.str();

  std::string csv = os.str();
  MaybeWriteCsv(config.out_csv, csv);
  return csv;
}

}  // namespace ctcfst
