// tests/unit/lattice-test.cc

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

#include "ctcfst/lattice.h"

#include <cmath>
#include <random>
#include <vector>

#include "ctcfst/decoder.h"
#include "ctcfst/loss.h"
#include "ctcfst/topology.h"
#include "doctest.h"
#include "tests/testing/oracles.h"

using namespace ctcfst;

namespace {

DenseEmissions Uniform(int32_t frames, int32_t units) {
  return DenseEmissions(frames, units, std::log(1.0 / units));
}

Wfst Supervision(TopologyKind kind, int32_t n_units,
                 std::vector<Label> target) {
  return BuildSupervision(BuildTopology({kind, n_units}), target);
}

}  // namespace

TEST_CASE("dense intersection lays out states frame-major") {
  Wfst sup = Supervision(TopologyKind::kCorrect, 3, {2});
  DenseEmissions em = Uniform(2, 3);
  Lattice lat = DenseIntersect(sup, em);

  CHECK(lat.NumFrames() == 2);
  CHECK_FALSE(lat.Empty());
  const Wfst &f = lat.Graph();
  REQUIRE(f.NumStates() > 0);
  CHECK(f.Start() == 0);
  for (StateId s = 0; s + 1 < f.NumStates(); ++s)
    CHECK(lat.FrameOf(s) <= lat.FrameOf(s + 1));
  for (StateId s = 0; s < f.NumStates(); ++s) {
    CHECK(lat.GraphStateOf(s) < sup.NumStates());
    for (const Arc &arc : f.ArcsFrom(s)) {
      // Emission arcs advance exactly one frame, epsilon arcs none.
      int32_t delta = lat.FrameOf(arc.next_state) - lat.FrameOf(s);
      CHECK(delta == (arc.ilabel == kEpsilon ? 0 : 1));
    }
    if (f.IsFinal(s)) CHECK(lat.FrameOf(s) == 2);
  }
}

TEST_CASE("forward scores match a fixture counted by hand") {
  // Three length-2 alignments of one unit, each with mass (1/3)^2.
  Wfst sup = Supervision(TopologyKind::kCorrect, 3, {2});
  DenseEmissions em = Uniform(2, 3);
  Lattice lat = DenseIntersect(sup, em);
  CHECK(ForwardScoreLog(lat) ==
        doctest::Approx(std::log(3.0 / 9.0)).epsilon(1e-12));
  CHECK(ForwardScoreTropical(lat) ==
        doctest::Approx(std::log(1.0 / 9.0)).epsilon(1e-12));

  LatticePath path = BestPath(lat);
  CHECK(path.score == doctest::Approx(std::log(1.0 / 9.0)).epsilon(1e-12));
  CHECK(path.ilabels.size() == 2);
  CHECK(Collapse(path.ilabels) == std::vector<Label>{2});
  CHECK(path.olabels == std::vector<Label>{2});
}

TEST_CASE("epsilon arcs are expanded within their frame") {
  Wfst sup = Supervision(TopologyKind::kCompact, 3, {2});
  DenseEmissions em = Uniform(2, 3);
  Lattice lat = DenseIntersect(sup, em);

  int64_t intra = 0, emission = 0;
  const Wfst &f = lat.Graph();
  for (StateId s = 0; s < f.NumStates(); ++s)
    for (const Arc &arc : f.ArcsFrom(s))
      (arc.ilabel == kEpsilon ? intra : emission) += 1;
  CHECK(intra > 0);  // the hub return arcs survive intersection
  CHECK(emission > 0);
  // Same alignment mass as the complete-digraph topology on this target.
  Lattice reference =
      DenseIntersect(Supervision(TopologyKind::kCorrect, 3, {2}), em);
  CHECK(ForwardScoreLog(lat) ==
        doctest::Approx(ForwardScoreLog(reference)).epsilon(1e-12));
}

TEST_CASE("an unreachable final frame leaves the lattice empty") {
  Wfst sup = Supervision(TopologyKind::kCorrect, 3, {2});
  DenseEmissions em(1, 3, kLogZero);  // nothing can be emitted at all
  Lattice lat = DenseIntersect(sup, em);
  CHECK(lat.Empty());
  CHECK(ForwardScoreLog(lat) == kLogZero);
  CHECK(ForwardScoreTropical(lat) == kLogZero);
  CHECK(BestPath(lat).score == kLogZero);
  CHECK(BestPath(lat).ilabels.empty());
  DenseEmissions occ = OccupancyPosteriors(lat, 3);
  for (double v : occ.values) CHECK(v == 0.0);
}

TEST_CASE("zero frames accept only when the start reaches a final") {
  DenseEmissions em(0, 3);
  Wfst sup = Supervision(TopologyKind::kCorrect, 3, {2});
  CHECK(DenseIntersect(sup, em).Empty());  // target needs at least one frame
  Wfst topo = BuildTopology({TopologyKind::kCorrect, 3});
  Lattice lat = DenseIntersect(topo, em);
  CHECK_FALSE(lat.Empty());
  CHECK(ForwardScoreLog(lat) == kLogOne);
}

TEST_CASE("occupancy posteriors are per-frame distributions") {
  Wfst sup = Supervision(TopologyKind::kCorrect, 3, {2});
  DenseEmissions em = Uniform(2, 3);
  DenseEmissions occ = OccupancyPosteriors(DenseIntersect(sup, em), 3);
  REQUIRE(occ.frames == 2);
  REQUIRE(occ.units == 3);
  for (int32_t t = 0; t < 2; ++t) {
    // Of the three equal-mass alignments, two consume the unit at each frame
    // and one consumes <blank>.
    CHECK(occ.At(t, 0) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(occ.At(t, 1) == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(occ.At(t, 2) == 0.0);
    CHECK(occ.At(t, 0) + occ.At(t, 1) + occ.At(t, 2) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("an infinite prune beam changes nothing") {
  Wfst sup = Supervision(TopologyKind::kEesen, 3, {2, 3});
  std::mt19937_64 rng(101);
  DenseEmissions em = testing::RandomEmissions(rng, 5, 3);
  Lattice exact = DenseIntersect(sup, em);
  Lattice pruned =
      DenseIntersect(sup, em, std::numeric_limits<double>::infinity());
  CHECK(exact.Graph().NumStates() == pruned.Graph().NumStates());
  CHECK(exact.Graph().NumArcs() == pruned.Graph().NumArcs());
  CHECK(ForwardScoreLog(exact) == ForwardScoreLog(pruned));
  CHECK(ForwardScoreTropical(exact) == ForwardScoreTropical(pruned));
}

TEST_CASE("a tight prune beam drops exactly the weak branch") {
  // Complete-digraph topology, one frame: <blank> carries 0.9, the unit 0.1.
  Wfst topo = BuildTopology({TopologyKind::kCorrect, 2});
  DenseEmissions em(1, 2);
  em.At(0, 0) = std::log(0.9);
  em.At(0, 1) = std::log(0.1);
  Lattice exact = DenseIntersect(topo, em);
  CHECK(ForwardScoreLog(exact) == doctest::Approx(0.0).epsilon(1e-12));
  Lattice pruned = DenseIntersect(topo, em, 1.0);  // ln 9 > 1: unit state dies
  CHECK(ForwardScoreLog(pruned) ==
        doctest::Approx(std::log(0.9)).epsilon(1e-12));
  CHECK(pruned.Graph().NumStates() < exact.Graph().NumStates());
  CHECK_THROWS_WITH_AS(DenseIntersect(topo, em, 0.0),
                       doctest::Contains("beam"), DataError);
}

TEST_CASE("graph labels wider than the emission matrix are rejected") {
  Wfst topo = BuildTopology({TopologyKind::kCorrect, 3});
  DenseEmissions em(2, 2);
  CHECK_THROWS_WITH_AS(DenseIntersect(topo, em),
                       doctest::Contains("emission range"), DataError);
}

TEST_CASE("forward scores agree with brute-force path enumeration") {
  std::mt19937_64 rng(20260815);
  for (int trial = 0; trial < 30; ++trial) {
    Wfst graph = testing::RandomAcyclicTransducer(rng, 5, 9, 3, 0.3);
    std::uniform_int_distribution<int32_t> frames_dist(0, 4);
    DenseEmissions em = testing::RandomEmissions(rng, frames_dist(rng), 3);
    Lattice lat = DenseIntersect(graph, em);
    double log_ref = testing::BruteForceForwardScore(graph, em);
    double max_ref = testing::BruteForceViterbiScore(graph, em);
    if (log_ref == kLogZero) {
      CHECK(lat.Empty());
    } else {
      CHECK(ForwardScoreLog(lat) == doctest::Approx(log_ref).epsilon(1e-9));
      CHECK(ForwardScoreTropical(lat) ==
            doctest::Approx(max_ref).epsilon(1e-9));
      CHECK(BestPath(lat).score == doctest::Approx(max_ref).epsilon(1e-9));
    }
  }
}
