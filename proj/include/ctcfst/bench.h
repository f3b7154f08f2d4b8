// ctcfst/bench.h

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

// Reproducible size and decode benchmarks over synthetic lexicon / bigram
// fixtures.  Every fixture is derived from a recorded seed so repeated runs
// produce identical graphs; only the timing columns vary between runs.

#ifndef CTCFST_BENCH_H_
#define CTCFST_BENCH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ctcfst/emissions.h"
#include "ctcfst/graph-pipeline.h"
#include "ctcfst/topology.h"

namespace ctcfst {

struct BenchConfig {
  std::vector<int32_t> vocab_sizes;  // unit-inventory sizes, one sweep each
  std::string lexicon_path;          // empty: synthesize from the seed
  std::string lm_path;               // empty: synthesize from the seed
  std::vector<TopologyKind> topologies = {TopologyKind::kCorrect,
                                          TopologyKind::kEesen,
                                          TopologyKind::kCompact,
                                          TopologyKind::kMinimal};
  std::string out_csv;       // empty: print only
  int32_t num_words = 100;   // synthetic lexicon size
  uint64_t seed = 17;
  int32_t num_utterances = 20;  // decode bench only
  int32_t num_frames = 50;      // decode bench only
  double decode_beam = 8.0;     // decode bench only
};

// Random lexicon of `num_words` words ("w001", "w002", ...) with
// pronunciations of one to four units drawn uniformly from 1..n_units.
Lexicon SynthesizeLexicon(int32_t n_units, int32_t num_words, uint64_t seed);

// Dense bigram over `vocabulary` (plus sentence end) with random positive
// probabilities, each history row normalized to one.
BigramLm SynthesizeBigram(const std::vector<std::string> &vocabulary,
                          uint64_t seed);

// Random log-softmax emission matrix.
DenseEmissions SynthesizeEmissions(int32_t frames, int32_t units,
                                   uint64_t seed);

// Sweeps vocab sizes x topologies, building the full decoding graph for each
// pair.  Returns CSV with columns topology,N,states,arcs,approx_bytes,
// build_seconds; header comments record the seed and the compact/correct arc
// ratio per N.  Configurations run concurrently; row order is deterministic.
std::string RunSizesBench(const BenchConfig &config);

// Decodes seeded synthetic utterances against each topology's decoding graph
// and appends score and wall-clock columns per utterance.  A header comment
// records the fraction of utterances where the compact and correct graphs
// produce the same word sequence.
std::string RunDecodeBench(const BenchConfig &config);

}  // namespace ctcfst

#endif  // CTCFST_BENCH_H_
