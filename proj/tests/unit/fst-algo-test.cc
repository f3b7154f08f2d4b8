// tests/unit/fst-algo-test.cc

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

#include "ctcfst/fst-algo.h"

#include <cmath>
#include <map>
#include <random>

#include "ctcfst/enumerate.h"
#include "doctest.h"
#include "tests/testing/oracles.h"

using namespace ctcfst;
using testing::RandomAcyclicTransducer;

namespace {

// Acceptor looping over labels 1..max_label with weight one; composing with
// it must be an identity on the transduction level.
Wfst IdentityAcceptor(Label max_label) {
  Wfst f;
  f.AddState();
  f.SetStart(0);
  f.SetFinal(0);
  for (Label l = 1; l <= max_label; ++l) f.AddArc(0, l, l, kLogOne, 0);
  f.Freeze();
  return f;
}

// Reference composition semantics: pair up transductions whose inner strings
// match and log-add the combined weights.
std::vector<Transduction> JoinOracle(const std::vector<Transduction> &a,
                                     const std::vector<Transduction> &b) {
  std::map<std::pair<std::vector<Label>, std::vector<Label>>, double> acc;
  for (const auto &ta : a)
    for (const auto &tb : b) {
      if (ta.output != tb.input) continue;
      auto it = acc.try_emplace({ta.input, tb.output}, kLogZero).first;
      it->second = LogAdd(it->second, Times(ta.weight, tb.weight));
    }
  std::vector<Transduction> out;
  for (const auto &[key, w] : acc) out.push_back({key.first, key.second, w});
  return out;
}

bool SameTransductions(const std::vector<Transduction> &a,
                       const std::vector<Transduction> &b, double tol) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].input != b[i].input || a[i].output != b[i].output ||
        std::fabs(a[i].weight - b[i].weight) > tol)
      return false;
  return true;
}

}  // namespace

TEST_CASE("composing with an identity acceptor preserves the transduction") {
  std::mt19937_64 rng(11);
  Wfst a = RandomAcyclicTransducer(rng, 6, 10, 3, 0.25);
  Wfst composed = Compose(a, IdentityAcceptor(3));
  EquivalenceResult r = CheckEquivalent(a, composed, 8);
  INFO(r.Describe());
  CHECK(r.equivalent);
}

TEST_CASE("composing with the empty language yields an empty graph") {
  std::mt19937_64 rng(12);
  Wfst a = RandomAcyclicTransducer(rng, 6, 10, 3, 0.25);
  Wfst nothing;  // one non-final state, no arcs: accepts nothing
  nothing.AddState();
  nothing.SetStart(0);
  nothing.Freeze();
  CHECK(Compose(a, nothing).NumStates() == 0);
}

TEST_CASE("output-epsilon against input-epsilon composes exactly once") {
  // a:eps then eps:b admits three interleavings (a first, b first, paired);
  // only one may survive or the log-semiring weight is double-counted.
  Wfst a;
  a.AddState();
  a.AddState();
  a.SetStart(0);
  a.AddArc(0, 7, kEpsilon, std::log(0.5), 1);
  a.SetFinal(1);
  a.Freeze();
  Wfst b;
  b.AddState();
  b.AddState();
  b.SetStart(0);
  b.AddArc(0, kEpsilon, 9, std::log(0.25), 1);
  b.SetFinal(1);
  b.Freeze();

  Wfst c = Compose(a, b);
  auto ts = EnumerateTransductions(c, 4);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].input == std::vector<Label>{7});
  CHECK(ts[0].output == std::vector<Label>{9});
  CHECK(ts[0].weight == doctest::Approx(std::log(0.125)).epsilon(1e-12));
}

TEST_CASE("composition matches the pairwise join oracle on random graphs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    Wfst a = RandomAcyclicTransducer(rng, 5, 9, 3, 0.3);
    Wfst b = RandomAcyclicTransducer(rng, 5, 9, 3, 0.3);
    auto expected = JoinOracle(EnumerateTransductions(a, 6),
                               EnumerateTransductions(b, 6));
    auto actual = EnumerateTransductions(Compose(a, b), 6);
    INFO("trial " << trial);
    CHECK(SameTransductions(expected, actual, 1e-9));
  }
}

TEST_CASE("composition rejects mismatched symbol tables") {
  auto units3 = std::make_shared<SymbolTable>(SymbolTable::Units(3));
  auto units4 = std::make_shared<SymbolTable>(SymbolTable::Units(4));
  Wfst a = IdentityAcceptor(2);
  a.SetOutputSymbols(units3);
  Wfst b = IdentityAcceptor(2);
  b.SetInputSymbols(units4);
  CHECK_THROWS_WITH_AS(Compose(a, b), doctest::Contains("symbol table"),
                       DataError);
  // Absent tables on either side disable the check.
  CHECK_NOTHROW(Compose(a, IdentityAcceptor(2)));
}

TEST_CASE("connect drops unreachable and dead-end states only") {
  Wfst f;
  for (int i = 0; i < 5; ++i) f.AddState();
  f.SetStart(0);
  f.AddArc(0, 1, 1, std::log(0.5), 1);
  f.SetFinal(1);
  f.AddArc(0, 2, 2, std::log(0.5), 2);  // state 2 is a dead end
  f.AddArc(3, 1, 1, kLogOne, 1);        // state 3 is unreachable
  f.SetFinal(4);                        // state 4 is unreachable
  f.Freeze();

  Wfst trimmed = Connect(f);
  CHECK(trimmed.NumStates() == 2);
  CHECK(trimmed.NumArcs() == 1);
  EquivalenceResult r = CheckEquivalent(f, trimmed, 4);
  INFO(r.Describe());
  CHECK(r.equivalent);

  Wfst again = Connect(trimmed);
  CHECK(again.NumStates() == trimmed.NumStates());
  CHECK(again.NumArcs() == trimmed.NumArcs());
}

TEST_CASE("connect returns the empty graph when no path reaches a final") {
  Wfst f;
  f.AddState();
  f.AddState();
  f.SetStart(0);
  f.AddArc(0, 1, 1, kLogOne, 1);
  f.Freeze();  // no finals at all
  Wfst trimmed = Connect(f);
  CHECK(trimmed.NumStates() == 0);
  CHECK(trimmed.Start() == kNoStateId);
}

TEST_CASE("epsilon removal log-adds parallel epsilon paths") {
  // Two parallel eps arcs of probability p feed a unit arc of probability q:
  // the folded arc must carry 2pq, not pq (a max-plus shortcut would lose
  // the factor of two).
  const double p = 0.3, q = 0.5;
  Wfst f;
  for (int i = 0; i < 3; ++i) f.AddState();
  f.SetStart(0);
  f.AddArc(0, kEpsilon, kEpsilon, std::log(p), 1);
  f.AddArc(0, kEpsilon, kEpsilon, std::log(p), 1);
  f.AddArc(1, 4, 4, std::log(q), 2);
  f.SetFinal(1, std::log(0.125));  // closure must fold into finals too
  f.SetFinal(2);
  f.Freeze();

  Wfst g = RemoveEpsilon(f);
  for (StateId s = 0; s < g.NumStates(); ++s)
    for (const Arc &arc : g.ArcsFrom(s))
      CHECK((arc.ilabel != kEpsilon || arc.olabel != kEpsilon));
  CHECK(g.Final(0) == doctest::Approx(std::log(2 * p * 0.125)).epsilon(1e-12));
  EquivalenceResult r = CheckEquivalent(f, g, 3);
  INFO(r.Describe());
  CHECK(r.equivalent);
}

TEST_CASE("epsilon removal leaves epsilon-free graphs untouched") {
  std::mt19937_64 rng(14);
  Wfst f = RandomAcyclicTransducer(rng, 5, 8, 3, 0.0);
  Wfst g = RemoveEpsilon(f);
  REQUIRE(g.NumStates() == f.NumStates());
  CHECK(g.NumArcs() == f.NumArcs());
  for (StateId s = 0; s < f.NumStates(); ++s) {
    CHECK(f.ArcsFrom(s) == g.ArcsFrom(s));
    CHECK(f.Final(s) == g.Final(s));
  }
}

TEST_CASE("epsilon removal rejects live epsilon cycles") {
  Wfst f;
  f.AddState();
  f.AddState();
  f.SetStart(0);
  f.AddArc(0, kEpsilon, kEpsilon, std::log(0.5), 1);
  f.AddArc(1, kEpsilon, kEpsilon, std::log(0.5), 0);
  f.SetFinal(1);
  f.Freeze();
  CHECK_THROWS_WITH_AS(RemoveEpsilon(f), doctest::Contains("epsilon cycle"),
                       DataError);
}

TEST_CASE("epsilon removal ignores zero-probability epsilon cycles") {
  Wfst f;
  f.AddState();
  f.AddState();
  f.SetStart(0);
  f.AddArc(0, kEpsilon, kEpsilon, std::log(0.5), 1);
  f.AddArc(1, kEpsilon, kEpsilon, kLogZero, 0);  // dead arc closes the loop
  f.SetFinal(1);
  f.Freeze();
  Wfst g = RemoveEpsilon(f);
  CHECK(g.Final(0) == doctest::Approx(std::log(0.5)).epsilon(1e-12));
}

TEST_CASE("topological sort renumbers arcs to ascend") {
  // A chain whose state ids are deliberately anti-sorted; the unique
  // topological order is 3, 2, 1, 0, so the start must land on id 0.
  Wfst f;
  for (int i = 0; i < 4; ++i) f.AddState();
  f.SetStart(3);
  f.AddArc(3, 1, 1, std::log(0.5), 2);
  f.AddArc(3, 3, 3, std::log(0.25), 1);
  f.AddArc(2, 2, 2, std::log(0.5), 1);
  f.AddArc(1, 4, 4, std::log(0.5), 0);
  f.SetFinal(0);
  f.Freeze();

  Wfst g = TopologicalSort(f);
  CHECK(g.Start() == 0);
  for (StateId s = 0; s < g.NumStates(); ++s)
    for (const Arc &arc : g.ArcsFrom(s)) CHECK(arc.next_state > s);
  EquivalenceResult r = CheckEquivalent(f, g, 4);
  INFO(r.Describe());
  CHECK(r.equivalent);
  CHECK(IsAcyclic(g));
}

TEST_CASE("topological sort reports a witness cycle") {
  Wfst f;
  for (int i = 0; i < 3; ++i) f.AddState();
  f.SetStart(0);
  f.AddArc(0, 1, 1, kLogOne, 1);
  f.AddArc(1, 1, 1, kLogOne, 2);
  f.AddArc(2, 1, 1, kLogOne, 1);
  f.SetFinal(2);
  f.Freeze();
  CHECK_FALSE(IsAcyclic(f));
  CHECK_THROWS_WITH_AS(TopologicalSort(f), doctest::Contains("->"), DataError);
}

TEST_CASE("input-epsilon ranking distinguishes tapes") {
  // 0 -(x:eps)-> 1 -(eps:y)-> 2: only the second arc consumes no input.
  Wfst f;
  for (int i = 0; i < 3; ++i) f.AddState();
  f.SetStart(0);
  f.AddArc(0, 5, kEpsilon, kLogOne, 1);
  f.AddArc(1, kEpsilon, 5, kLogOne, 2);
  f.SetFinal(2);
  f.Freeze();
  auto input_rank = InputEpsilonRank(f);
  CHECK(input_rank[1] < input_rank[2]);
  auto full_rank = EpsilonRank(f);  // no eps:eps arcs: all ranks equal
  CHECK(full_rank == std::vector<int32_t>{0, 0, 0});
}

TEST_CASE("a live input-epsilon self-loop is a ranking error") {
  Wfst f;
  f.AddState();
  f.SetStart(0);
  f.AddArc(0, kEpsilon, 3, std::log(0.5), 0);
  f.SetFinal(0);
  f.Freeze();
  CHECK_THROWS_WITH_AS(InputEpsilonRank(f), doctest::Contains("cycle"),
                       DataError);
}
