// tools/ctcfst.cc

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

// Command-line front-end: build CTC topologies, compose decoding graphs,
// compute CTC / MMI losses with gradients, decode, and run the benchmarks.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctcfst/bench.h"
#include "ctcfst/decoder.h"
#include "ctcfst/fst-algo.h"
#include "ctcfst/fst-io.h"
#include "ctcfst/graph-pipeline.h"
#include "ctcfst/loss.h"
#include "ctcfst/topology.h"

namespace {

using namespace ctcfst;

// Whitespace-separated unit names resolved against `units`.
std::vector<Label> ReadTargetFile(const std::string &path,
                                  const SymbolTable &units) {
  std::ifstream is(path);
  if (!is) CTCFST_ERR << "cannot open \"" << path << "\"";
  std::vector<Label> target;
  std::string token;
  while (is >> token) {
    Label id = units.Find(token);
    if (id < 0) CTCFST_ERR << "unknown unit \"" << token << "\" in target";
    if (id < 2)
      CTCFST_ERR << "\"" << token << "\" cannot appear in a target";
    target.push_back(id);
  }
  return target;
}

void PrintLoss(double loss) {
  if (std::isinf(loss)) {
    std::cout << "inf\n";
  } else {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", loss);
    std::cout << buffer << '\n';
  }
}

const std::vector<std::string> kTopologyNames = {"correct", "eesen", "compact",
                                                 "minimal"};

struct TopoFlags {
  std::string kind;
  bool selfless = false;
  bool train_mode = false;

  void Register(CLI::App *cmd) {
    cmd->add_option("--topo", kind, "Topology kind")
        ->required()
        ->check(CLI::IsMember(kTopologyNames));
    cmd->add_flag("--selfless", selfless, "Drop the unit self-loops");
    cmd->add_flag("--train-mode", train_mode,
                  "Relabel compact's epsilon returns with the emulation unit");
  }

  TopologySpec Spec(int32_t n_units) const {
    if (kind == "minimal" && selfless)
      throw CLI::ValidationError("minimal has no selfless variant");
    return {ParseTopologyKind(kind), n_units, selfless,
            train_mode ? TopologyMode::kTrain : TopologyMode::kDecode};
  }
};

// Emissions are augmented (frame doubling plus the emulation column) exactly
// when the topology needs the emulation unit to advance.
DenseEmissions ScoredEmissions(const TopologySpec &spec,
                               const DenseEmissions &em) {
  if (EmissionUnits(spec) == em.units + 1) return AugmentEmissionsForCompact(em);
  return em;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"CTC topology and weighted FST toolkit"};
  app.require_subcommand(1);

  // ---- topo ----
  auto *topo_cmd = app.add_subcommand("topo", "Build a CTC topology");
  TopoFlags topo_flags;
  std::string topo_kind_positional;
  int32_t topo_units = 0;
  std::string topo_out;
  topo_cmd->add_option("kind", topo_kind_positional, "Topology kind")
      ->required()
      ->check(CLI::IsMember(kTopologyNames));
  topo_cmd->add_option("--units", topo_units, "Emission units, counting <blank>")
      ->required()
      ->check(CLI::PositiveNumber);
  topo_cmd->add_flag("--selfless", topo_flags.selfless,
                     "Drop the unit self-loops");
  topo_cmd->add_flag("--train-mode", topo_flags.train_mode,
                     "Relabel compact's epsilon returns with the emulation unit");
  topo_cmd->add_option("--out", topo_out, "Write the graph in text format");
  topo_cmd->callback([&] {
    topo_flags.kind = topo_kind_positional;
    Wfst topo = BuildTopology(topo_flags.Spec(topo_units));
    if (!topo_out.empty()) WriteFstText(topo, topo_out);
    GraphStats stats = ComputeGraphStats(topo);
    std::cout << "states=" << stats.states << " arcs=" << stats.arcs << '\n';
  });

  // ---- graph ----
  auto *graph_cmd = app.add_subcommand("graph", "Compose and inspect graphs");
  graph_cmd->require_subcommand(1);

  auto *compose_cmd =
      graph_cmd->add_subcommand("compose", "Compose graphs right to left");
  std::vector<std::string> compose_inputs;
  std::string compose_out;
  compose_cmd->add_option("inputs", compose_inputs, "Graph files, left to right")
      ->required()
      ->expected(2, -1);
  compose_cmd->add_option("--out", compose_out, "Output path")->required();
  compose_cmd->callback([&] {
    Wfst result = ReadFstText(compose_inputs.back());
    for (size_t i = compose_inputs.size() - 1; i-- > 0;)
      result = Compose(ReadFstText(compose_inputs[i]), result);
    result = Connect(result);
    WriteFstText(result, compose_out);
    GraphStats stats = ComputeGraphStats(result);
    std::cout << "states=" << stats.states << " arcs=" << stats.arcs << '\n';
  });

  auto *stats_cmd = graph_cmd->add_subcommand(
      "stats", "Print \"states arcs approx_bytes\" for a graph");
  std::string stats_input;
  stats_cmd->add_option("input", stats_input, "Graph file")->required();
  stats_cmd->callback([&] {
    GraphStats stats = ComputeGraphStats(ReadFstText(stats_input));
    std::cout << stats.states << ' ' << stats.arcs << ' ' << stats.approx_bytes
              << '\n';
  });

  // ---- loss ----
  auto *loss_cmd = app.add_subcommand("loss", "Losses and gradients");
  loss_cmd->require_subcommand(1);

  auto *ctc_cmd = loss_cmd->add_subcommand("ctc", "CTC negative log-likelihood");
  TopoFlags ctc_flags;
  std::string ctc_target, ctc_emissions, ctc_grad_out;
  ctc_flags.Register(ctc_cmd);
  ctc_cmd->add_option("--target", ctc_target, "Target unit names, whitespace split")
      ->required();
  ctc_cmd->add_option("--emissions", ctc_emissions, "Emission TSV")->required();
  ctc_cmd->add_option("--grad-out", ctc_grad_out, "Write the gradient TSV");
  ctc_cmd->callback([&] {
    DenseEmissions em = ReadEmissionsTsv(ctc_emissions);
    TopologySpec spec = ctc_flags.Spec(em.units);
    Wfst topo = BuildTopology(spec);
    SymbolTable units = SymbolTable::Units(em.units, false);
    std::vector<Label> target = ReadTargetFile(ctc_target, units);
    LossResult result = CtcLossAndGrad(topo, target, ScoredEmissions(spec, em));
    PrintLoss(result.loss);
    if (!ctc_grad_out.empty()) WriteEmissionsTsv(result.grad, ctc_grad_out);
  });

  auto *mmi_cmd = loss_cmd->add_subcommand("mmi", "Lattice-free MMI loss");
  TopoFlags mmi_flags;
  std::string mmi_target, mmi_emissions, mmi_lm, mmi_grad_out;
  double mmi_prune_beam = 0.0;
  mmi_flags.Register(mmi_cmd);
  mmi_cmd->add_option("--target", mmi_target, "Target unit names, whitespace split")
      ->required();
  mmi_cmd->add_option("--emissions", mmi_emissions, "Emission TSV")->required();
  mmi_cmd->add_option("--lm", mmi_lm, "Unit-level bigram for the denominator")
      ->required();
  auto *beam_opt = mmi_cmd->add_option(
      "--prune-beam", mmi_prune_beam, "Beam for the denominator intersection");
  beam_opt->check(CLI::PositiveNumber);
  mmi_cmd->add_option("--grad-out", mmi_grad_out, "Write the gradient TSV");
  mmi_cmd->callback([&] {
    DenseEmissions em = ReadEmissionsTsv(mmi_emissions);
    TopologySpec spec = mmi_flags.Spec(em.units);
    Wfst topo = BuildTopology(spec);
    auto units = std::make_shared<SymbolTable>(
        SymbolTable::Units(em.units, false));
    std::vector<Label> target = ReadTargetFile(mmi_target, *units);
    Wfst numerator = BuildSupervision(topo, target);
    Wfst denominator = Connect(Compose(topo, BuildNgramFst(ReadBigramLm(mmi_lm), units)));
    std::optional<double> beam;
    if (beam_opt->count()) beam = mmi_prune_beam;
    LossResult result =
        MmiLossAndGrad(numerator, denominator, ScoredEmissions(spec, em), beam);
    PrintLoss(result.loss);
    if (!mmi_grad_out.empty()) WriteEmissionsTsv(result.grad, mmi_grad_out);
  });

  // ---- decode ----
  auto *decode_cmd = app.add_subcommand("decode", "Greedy and Viterbi decoding");
  decode_cmd->require_subcommand(1);

  auto *greedy_cmd = decode_cmd->add_subcommand("greedy", "Frame-wise argmax");
  std::string greedy_emissions, greedy_utt = "utt";
  greedy_cmd->add_option("--emissions", greedy_emissions, "Emission TSV")
      ->required();
  greedy_cmd->add_option("--utt-id", greedy_utt, "Utterance id for the output");
  greedy_cmd->callback([&] {
    DenseEmissions em = ReadEmissionsTsv(greedy_emissions);
    Hypothesis hyp = GreedyDecode(em);
    SymbolTable units = SymbolTable::Units(em.units, false);
    std::cout << FormatHypothesis(greedy_utt, hyp, &units) << '\n';
  });

  auto *viterbi_cmd =
      decode_cmd->add_subcommand("viterbi", "Best path through a graph");
  std::string vit_graph, vit_emissions, vit_words, vit_utt = "utt";
  double vit_beam = std::numeric_limits<double>::infinity();
  viterbi_cmd->add_option("--graph", vit_graph, "Decoding graph file")
      ->required();
  viterbi_cmd->add_option("--emissions", vit_emissions, "Emission TSV")
      ->required();
  viterbi_cmd->add_option("--beam", vit_beam, "Prune tokens below best-beam")
      ->check(CLI::PositiveNumber);
  viterbi_cmd->add_option("--words", vit_words, "Symbol table for outputs");
  viterbi_cmd->add_option("--utt-id", vit_utt, "Utterance id for the output");
  viterbi_cmd->callback([&] {
    Wfst graph = ReadFstText(vit_graph);
    DenseEmissions em = ReadEmissionsTsv(vit_emissions);
    std::optional<SymbolTable> words;
    if (!vit_words.empty()) words = ReadSymbolTable(vit_words);
    Hypothesis hyp = ViterbiDecode(graph, em, vit_beam);
    std::cout << FormatHypothesis(vit_utt, hyp, words ? &*words : nullptr)
              << '\n';
  });

  // ---- bench ----
  auto *bench_cmd = app.add_subcommand("bench", "Reproducible benchmarks");
  bench_cmd->require_subcommand(1);
  BenchConfig bench;
  std::vector<std::string> bench_topos = kTopologyNames;

  auto register_bench = [&](CLI::App *cmd) {
    cmd->add_option("--units", bench.vocab_sizes,
                    "Unit-inventory sizes to sweep")
        ->required()
        ->delimiter(',');
    cmd->add_option("--topos", bench_topos, "Topologies to include")
        ->delimiter(',')
        ->check(CLI::IsMember(kTopologyNames));
    cmd->add_option("--lexicon", bench.lexicon_path,
                    "Lexicon file (default: synthesized)");
    cmd->add_option("--lm", bench.lm_path,
                    "Word bigram file (default: synthesized)");
    cmd->add_option("--words", bench.num_words, "Synthetic lexicon size")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", bench.seed, "Fixture seed");
    cmd->add_option("--out", bench.out_csv, "Also write the CSV here");
  };

  auto *sizes_cmd = bench_cmd->add_subcommand("sizes", "Decoding graph sizes");
  register_bench(sizes_cmd);
  sizes_cmd->callback([&] {
    bench.topologies.clear();
    for (const auto &name : bench_topos)
      bench.topologies.push_back(ParseTopologyKind(name));
    std::cout << RunSizesBench(bench);
  });

  auto *bdecode_cmd =
      bench_cmd->add_subcommand("decode", "Decode synthetic utterances");
  register_bench(bdecode_cmd);
  bdecode_cmd->add_option("--utts", bench.num_utterances, "Utterances per sweep")
      ->check(CLI::PositiveNumber);
  bdecode_cmd->add_option("--frames", bench.num_frames, "Frames per utterance")
      ->check(CLI::PositiveNumber);
  bdecode_cmd->add_option("--beam", bench.decode_beam, "Viterbi beam")
      ->check(CLI::PositiveNumber);
  bdecode_cmd->callback([&] {
    bench.topologies.clear();
    for (const auto &name : bench_topos)
      bench.topologies.push_back(ParseTopologyKind(name));
    std::cout << RunDecodeBench(bench);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const DataError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
