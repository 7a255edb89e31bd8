// Copyright 2026 The gcx Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "gcx/graph.hpp"
#include "gcx/graph_complex.hpp"
#include "oracles.hpp"

namespace gcx {
namespace {

using fixtures::K4;
using fixtures::Theta;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

DirectedOrderedGraph Asymmetric() {
  return DirectedOrderedGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {3, 5}});
}

GraphIso ThetaSwap() { return {{1, 0}, {0, 1, 2}, {true, true, true}}; }

std::vector<DirectedOrderedGraph> SmallGenerators() {
  std::vector<DirectedOrderedGraph> out;
  for (int g = 2; g <= 4; ++g) {
    for (int v = 1; v <= 2 * (g - 1); ++v) {
      for (auto& x : EnumerateGenerators(v, v + g - 1, true)) out.push_back(x);
    }
  }
  return out;
}

TEST(Graph, RejectsOutOfRangeLabels) {
  EXPECT_EQ(CodeOf([] { DirectedOrderedGraph(2, {{0, 2}}); }),
            ErrorCode::kLabelOutOfRange);
}

TEST(Graph, ValidateGenerator) {
  EXPECT_NO_THROW(ValidateGenerator(Theta()));
  EXPECT_EQ(CodeOf([] { ValidateGenerator(DirectedOrderedGraph(1, {})); }),
            ErrorCode::kEmptyGraph);
  const DirectedOrderedGraph two_thetas(
      4, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}});
  EXPECT_EQ(CodeOf([&] { ValidateGenerator(two_thetas); }),
            ErrorCode::kNotConnected);
  EXPECT_EQ(CodeOf([] { ValidateGenerator(fixtures::SingleLoop()); }),
            ErrorCode::kValenceTooLow);
}

TEST(Graph, ValencesCountLoopsTwice) {
  const DirectedOrderedGraph g(2, {{0, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(g.Valences(), (std::vector<int>{3, 3}));
  EXPECT_TRUE(g.IsTrivalent());
  EXPECT_TRUE(g.HasLoop());
  EXPECT_FALSE(g.HasRepeatedEdge());
  EXPECT_TRUE(Theta().HasRepeatedEdge());
}

TEST(Graph, ContractTheta) {
  EXPECT_EQ(ContractEdge(Theta(), 0), DirectedOrderedGraph(1, {{0, 0}, {0, 0}}));
}

TEST(Graph, ContractK4MatchesHandComputation) {
  const DirectedOrderedGraph expected(3, {{0, 1}, {0, 2}, {0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(ContractEdge(K4(), 0), expected);
  EXPECT_EQ(ContractEdge(K4(), 0), oracle::Contract(K4(), 0));
}

TEST(Graph, ContractionMatchesOracleEverywhere) {
  for (const auto& g : SmallGenerators()) {
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).IsLoop()) continue;
      const auto c = ContractEdge(g, e);
      EXPECT_EQ(c, oracle::Contract(g, e));
      EXPECT_EQ(c.vertex_count(), g.vertex_count() - 1);
      EXPECT_EQ(c.edge_count(), g.edge_count() - 1);
    }
  }
}

TEST(Graph, ContractLoopFails) {
  const DirectedOrderedGraph g(2, {{0, 0}, {0, 1}, {0, 1}, {1, 1}});
  EXPECT_EQ(CodeOf([&] { ContractEdge(g, 0); }), ErrorCode::kSelfLoopContraction);
}

TEST(Graph, ContractVertexSetOfEdgeEqualsContractEdge) {
  const std::vector<int> pair = {0, 1};
  EXPECT_EQ(ContractVertexSet(K4(), pair), ContractEdge(K4(), 0));
}

TEST(Graph, IsomorphismExamples) {
  EXPECT_EQ(FindIsomorphisms(Theta(), Theta()).size(), 12u);
  EXPECT_TRUE(FindIsomorphisms(Theta(), K4()).empty());
  for (const auto& g : SmallGenerators()) {
    const auto isos = FindIsomorphisms(g, g);
    EXPECT_NE(std::find(isos.begin(), isos.end(), IdentityIso(g)), isos.end());
  }
}

TEST(Graph, IsomorphismsMatchBruteForce) {
  std::mt19937_64 rng(11);
  for (const auto& g : SmallGenerators()) {
    if (g.edge_count() > 7) continue;
    const auto h = fixtures::RandomRelabel(g, rng);
    EXPECT_EQ(FindIsomorphisms(g, h), oracle::Isomorphisms(g, h));
  }
}

TEST(Graph, IsomorphismsAreSortedAndInvertible) {
  std::mt19937_64 rng(12);
  for (const auto& g : SmallGenerators()) {
    const auto h = fixtures::RandomRelabel(g, rng);
    const auto forward = FindIsomorphisms(g, h);
    EXPECT_TRUE(std::is_sorted(forward.begin(), forward.end()));
    std::set<GraphIso> inverted;
    for (const auto& a : forward) inverted.insert(Inverse(a));
    const auto backward = FindIsomorphisms(h, g);
    EXPECT_EQ(inverted, std::set<GraphIso>(backward.begin(), backward.end()));
  }
}

TEST(Graph, SignExamples) {
  EXPECT_EQ(Signs(IdentityIso(Theta()), 3), (IsoSigns{1, 1, 1, 1}));
  EXPECT_EQ(Signs(ThetaSwap(), 3), (IsoSigns{-1, 1, -1, 1}));
  const GraphIso transposition{{0, 1}, {1, 0, 2}, {false, false, false}};
  EXPECT_EQ(Signs(transposition, 4), (IsoSigns{1, -1, 1, -1}));
}

TEST(Graph, SignParitiesAreAdditive) {
  for (const auto& g : SmallGenerators()) {
    const auto group = AutGroup(g);
    if (group.size() > 50) continue;
    for (const auto& a : group) {
      for (const auto& b : group) {
        const auto ab = Compose(b, a);
        for (int d : {3, 4}) {
          const auto sa = Signs(a, d), sb = Signs(b, d), sab = Signs(ab, d);
          EXPECT_EQ(sab.vertex, sa.vertex * sb.vertex);
          EXPECT_EQ(sab.edge, sa.edge * sb.edge);
          EXPECT_EQ(sab.arrow, sa.arrow * sb.arrow);
          EXPECT_EQ(sab.sgn_d, sa.sgn_d * sb.sgn_d);
        }
      }
    }
  }
}

TEST(Graph, SignsMatchOracle) {
  for (const auto& g : SmallGenerators()) {
    for (const auto& a : AutGroup(g)) {
      for (int d : {3, 4, 5}) EXPECT_EQ(Signs(a, d).sgn_d, oracle::SgnD(a, d));
      for (Parity p : {Parity::kOdd, Parity::kEven}) {
        EXPECT_EQ(RelationSign(a, p), oracle::RelationSign(a, p));
      }
    }
  }
}

TEST(Graph, AutGroupExamples) {
  EXPECT_EQ(AutGroup(Theta()).size(), 12u);
  EXPECT_EQ(AutGroup(K4()).size(), 24u);
  EXPECT_EQ(AutGroup(fixtures::SingleLoop()).size(), 2u);
  EXPECT_EQ(AutGroup(Asymmetric()).size(), 1u);
}

TEST(Graph, AutGroupIsAGroup) {
  for (const auto& g : SmallGenerators()) {
    const auto group = AutGroup(g);
    if (group.size() > 50) continue;
    const std::set<GraphIso> members(group.begin(), group.end());
    EXPECT_TRUE(members.count(IdentityIso(g)));
    for (const auto& a : group) {
      EXPECT_TRUE(members.count(Inverse(a)));
      for (const auto& b : group) EXPECT_TRUE(members.count(Compose(b, a)));
    }
  }
}

TEST(Graph, SignedAutCount) {
  EXPECT_EQ(SignedAutCount(Theta(), 3), 12);
  EXPECT_EQ(SignedAutCount(Theta(), 4), 0);
  for (int d : {3, 4}) EXPECT_EQ(SignedAutCount(Asymmetric(), d), 1);
  for (const auto& g : SmallGenerators()) {
    for (int d : {3, 4}) {
      EXPECT_EQ(SignedAutCount(g, d), oracle::SignedAutCount(g, d));
    }
  }
}

TEST(Graph, PsiGammaExamples) {
  EXPECT_TRUE(PsiGamma(Theta(), IdentityIso(Theta())).IsIdentity());
  const auto psi = PsiGamma(Theta(), ThetaSwap());
  EXPECT_EQ(psi, SignedPermutation({0, 1, 2}, {true, true, true}));
  const GraphIso bogus{{0, 1, 2, 3}, {1, 0, 2, 3, 4, 5}, std::vector<bool>(6)};
  EXPECT_EQ(CodeOf([&] { PsiGamma(K4(), bogus); }),
            ErrorCode::kNotAnAutomorphism);
}

TEST(Graph, PsiGammaIsInjectiveHomomorphism) {
  for (const auto& g : SmallGenerators()) {
    const auto group = AutGroup(g);
    std::set<SignedPermutation> images;
    for (const auto& a : group) images.insert(PsiGamma(g, a));
    EXPECT_EQ(images.size(), group.size());
    if (group.size() > 50) continue;
    for (const auto& a : group) {
      for (const auto& b : group) {
        EXPECT_EQ(PsiGamma(g, Compose(b, a)),
                  Compose(PsiGamma(g, b), PsiGamma(g, a)));
      }
    }
  }
}

TEST(Graph, CommutingIdentity) {
  EXPECT_TRUE(EdgeTupleActionCheck(Theta(), IdentityIso(Theta())));
  EXPECT_TRUE(EdgeTupleActionCheck(Theta(), ThetaSwap()));
  int three_cycles = 0;
  for (const auto& a : AutGroup(K4())) {
    const auto& v = a.vertex_map;
    const int fixed = (v[0] == 0) + (v[1] == 1) + (v[2] == 2) + (v[3] == 3);
    if (fixed == 1) {
      ++three_cycles;
      EXPECT_TRUE(EdgeTupleActionCheck(K4(), a));
    }
  }
  EXPECT_EQ(three_cycles, 8);
  for (const auto& g : SmallGenerators()) {
    for (const auto& a : AutGroup(g)) EXPECT_TRUE(EdgeTupleActionCheck(g, a));
  }
}

}  // namespace
}  // namespace gcx
