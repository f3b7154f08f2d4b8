// tests/unit/loss-test.cc

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

#include "ctcfst/loss.h"

#include <cmath>
#include <random>
#include <vector>

#include "ctcfst/graph-pipeline.h"
#include "ctcfst/lattice.h"
#include "ctcfst/topology.h"
#include "doctest.h"
#include "tests/testing/oracles.h"

using namespace ctcfst;

namespace {

DenseEmissions Uniform(int32_t frames, int32_t units) {
  return DenseEmissions(frames, units, std::log(1.0 / units));
}

double RowSum(const DenseEmissions &m, int32_t t) {
  double sum = 0;
  for (int32_t u = 0; u < m.units; ++u) sum += m.At(t, u);
  return sum;
}

}  // namespace

TEST_CASE("supervision graphs reject reserved ids and count alignments") {
  Wfst topo = BuildTopology({TopologyKind::kCorrect, 3});
  CHECK_THROWS_WITH_AS(BuildSupervision(topo, std::vector<Label>{2, 0, 3}),
                       doctest::Contains("target"), DataError);
  CHECK_THROWS_WITH_AS(BuildSupervision(topo, std::vector<Label>{1}),
                       doctest::Contains("target"), DataError);
  Wfst sup = BuildSupervision(topo, std::vector<Label>{2});
  CHECK_FALSE(sup.NumStates() == 0);
}

TEST_CASE("one-unit losses match hand-computed values per topology") {
  // Two uniform frames over {<blank>, A, B}: every alignment has mass 1/9.
  DenseEmissions em = Uniform(2, 3);
  std::vector<Label> target = {2};
  const double ln3 = 1.0986122886681098;

  for (TopologyKind kind :
       {TopologyKind::kCorrect, TopologyKind::kEesen, TopologyKind::kCompact}) {
    std::string kind_name = TopologyKindName(kind);
    CAPTURE(kind_name);
    LossResult r = CtcLossAndGrad(BuildTopology({kind, 3}), target, em);
    // Three alignments: unit+blank, blank+unit, unit twice.
    CHECK(r.loss == doctest::Approx(ln3).epsilon(1e-12));
    REQUIRE(r.grad.frames == 2);
    for (int32_t t = 0; t < 2; ++t) {
      CHECK(r.grad.At(t, 0) == doctest::Approx(-1.0 / 3).epsilon(1e-12));
      CHECK(r.grad.At(t, 1) == doctest::Approx(-2.0 / 3).epsilon(1e-12));
      CHECK(r.grad.At(t, 2) == 0.0);
      CHECK(RowSum(r.grad, t) == doctest::Approx(-1.0).epsilon(1e-12));
    }
  }

  // The one-state topology forbids the repeated-unit alignment: 2 paths.
  LossResult minimal =
      CtcLossAndGrad(BuildTopology({TopologyKind::kMinimal, 3}), target, em);
  CHECK(minimal.loss == doctest::Approx(std::log(4.5)).epsilon(1e-12));
  CHECK(minimal.loss == doctest::Approx(1.5040773967762742).epsilon(1e-12));

  // Empty target: the all-<blank> alignment is the only path.
  LossResult empty =
      CtcLossAndGrad(BuildTopology({TopologyKind::kCorrect, 3}),
                     std::vector<Label>{}, em);
  CHECK(empty.loss == doctest::Approx(std::log(9.0)).epsilon(1e-12));
}

TEST_CASE("an unalignable target yields infinite loss and zero grad") {
  DenseEmissions em = Uniform(1, 3);  // one frame cannot fit two units
  LossResult r = CtcLossAndGrad(BuildTopology({TopologyKind::kCorrect, 3}),
                                std::vector<Label>{2, 3}, em);
  CHECK(std::isinf(r.loss));
  CHECK(r.loss > 0);
  REQUIRE(r.grad.frames == 1);
  REQUIRE(r.grad.units == 3);
  for (double g : r.grad.values) CHECK(g == 0.0);
}

TEST_CASE("train-mode frame doubling reproduces the plain loss") {
  DenseEmissions em = Uniform(1, 3);
  std::vector<Label> target = {2};
  LossResult reference =
      CtcLossAndGrad(BuildTopology({TopologyKind::kCorrect, 3}), target, em);
  Wfst train = BuildTopology(
      {TopologyKind::kCompact, 3, false, TopologyMode::kTrain});
  LossResult doubled =
      CtcLossAndGrad(train, target, AugmentEmissionsForCompact(em));
  CHECK(doubled.loss == doctest::Approx(reference.loss).epsilon(1e-12));
  CHECK(doubled.loss == doctest::Approx(1.0986122886681098).epsilon(1e-12));
  // Gradient comes back in the doubled shape; real frames sit at even rows.
  REQUIRE(doubled.grad.frames == 2);
  REQUIRE(doubled.grad.units == 4);
  CHECK(doubled.grad.At(0, 1) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(doubled.grad.At(0, 0) == 0.0);
}

TEST_CASE("losses agree with the classic dynamic program") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int32_t> units_dist(2, 5);
  std::uniform_int_distribution<int32_t> frames_dist(0, 8);
  int finite = 0, infinite = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int32_t n_units = units_dist(rng);
    DenseEmissions em = testing::RandomEmissions(rng, frames_dist(rng), n_units);
    std::vector<Label> target = testing::RandomTarget(rng, 4, n_units);
    double reference = testing::ClassicCtcLoss(target, em);
    LossResult r = CtcLossAndGrad(BuildTopology({TopologyKind::kCorrect, n_units}),
                                  target, em);
    if (std::isinf(reference)) {
      CHECK(std::isinf(r.loss));
      ++infinite;
    } else {
      CHECK(r.loss == doctest::Approx(reference).epsilon(1e-9));
      ++finite;
    }
  }
  CHECK(finite > 5);  // the sweep must exercise both outcomes
  CHECK(infinite > 5);
}

TEST_CASE("loss gradients match central finite differences") {
  std::mt19937_64 rng(777);
  DenseEmissions em = testing::RandomEmissions(rng, 3, 3);
  std::vector<Label> target = {2, 3};
  Wfst topo = BuildTopology({TopologyKind::kEesen, 3});
  LossResult r = CtcLossAndGrad(topo, target, em);
  REQUIRE(std::isfinite(r.loss));
  const double step = 1e-5;
  for (size_t i = 0; i < em.values.size(); ++i) {
    DenseEmissions plus = em, minus = em;
    plus.values[i] += step;
    minus.values[i] -= step;
    double fd = (CtcLossAndGrad(topo, target, plus).loss -
                 CtcLossAndGrad(topo, target, minus).loss) /
                (2 * step);
    CHECK(r.grad.values[i] == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("discriminative loss is zero when numerator equals denominator") {
  DenseEmissions em = Uniform(2, 3);
  Wfst sup = BuildSupervision(BuildTopology({TopologyKind::kCorrect, 3}),
                              std::vector<Label>{2});
  LossResult r = MmiLossAndGrad(sup, sup, em);
  CHECK(r.loss == 0.0);
  for (double g : r.grad.values) CHECK(g == 0.0);
}

TEST_CASE("discriminative loss equals the likelihood gap on a fixture") {
  // Denominator = the bare topology: with uniform emissions it sums to one,
  // so the loss collapses to the plain alignment loss of the numerator.
  DenseEmissions em = Uniform(2, 3);
  Wfst topo = BuildTopology({TopologyKind::kCorrect, 3});
  Wfst sup = BuildSupervision(topo, std::vector<Label>{2});
  LossResult r = MmiLossAndGrad(sup, topo, em);
  CHECK(r.loss == doctest::Approx(1.0986122886681098).epsilon(1e-12));
  REQUIRE(r.grad.frames == 2);
  for (int32_t t = 0; t < 2; ++t) {
    // denominator occupancy 1/3 each; numerator (1/3, 2/3, 0)
    CHECK(r.grad.At(t, 0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.grad.At(t, 1) == doctest::Approx(-1.0 / 3).epsilon(1e-12));
    CHECK(r.grad.At(t, 2) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(RowSum(r.grad, t) == doctest::Approx(0.0).epsilon(1e-12));
  }

  // An impossible numerator turns the loss infinite with a zero gradient.
  Wfst bad = BuildSupervision(topo, std::vector<Label>{2, 3, 2});
  LossResult inf_r = MmiLossAndGrad(bad, topo, em);
  CHECK(std::isinf(inf_r.loss));
  for (double g : inf_r.grad.values) CHECK(g == 0.0);

  // A denominator that cannot cover the frames is a data error.
  Wfst linear = BuildLinear(std::vector<Label>{2});
  CHECK_THROWS_WITH_AS(MmiLossAndGrad(sup, linear, em),
                       doctest::Contains("denominator"), DataError);
}

TEST_CASE("a huge denominator beam reproduces the exact loss") {
  std::mt19937_64 rng(31337);
  DenseEmissions em = testing::RandomEmissions(rng, 4, 3);
  Wfst topo = BuildTopology({TopologyKind::kCompact, 3});
  Wfst sup = BuildSupervision(topo, std::vector<Label>{2, 3});
  LossResult exact = MmiLossAndGrad(sup, topo, em);
  LossResult beamed = MmiLossAndGrad(sup, topo, em, 1e9);
  CHECK(beamed.loss == exact.loss);
  REQUIRE(beamed.grad.values.size() == exact.grad.values.size());
  for (size_t i = 0; i < exact.grad.values.size(); ++i)
    CHECK(beamed.grad.values[i] == exact.grad.values[i]);

  // Discriminative gradients integrate to zero over each frame.
  for (int32_t t = 0; t < 4; ++t)
    CHECK(RowSum(exact.grad, t) == doctest::Approx(0.0).epsilon(1e-9));
}
