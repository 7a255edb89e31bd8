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

#include <map>
#include <numeric>

#include "fixtures.hpp"
#include "gcx/graph_complex.hpp"
#include "oracles.hpp"

namespace gcx {
namespace {

using fixtures::K4;
using fixtures::Theta;

constexpr Parity kParities[] = {Parity::kOdd, Parity::kEven};

std::vector<DirectedOrderedGraph> Reps(const GraphBasis& b) {
  std::vector<DirectedOrderedGraph> out;
  for (const auto& c : b.classes()) out.push_back(c.representative);
  return out;
}

TEST(GraphComplex, CanonicalizeExamples) {
  const auto odd = Canonicalize(Theta(), Parity::kOdd);
  EXPECT_NE(odd.sign, 0);
  EXPECT_FALSE(odd.canonical.zero);
  const auto again = Canonicalize(odd.canonical.representative, Parity::kOdd);
  EXPECT_EQ(again.sign, 1);
  EXPECT_EQ(again.canonical.representative, odd.canonical.representative);
  EXPECT_EQ(Canonicalize(Theta(), Parity::kEven).sign, 0);
}

TEST(GraphComplex, CanonicalizeUnderRelabeling) {
  std::mt19937_64 rng(31);
  for (int v = 2; v <= 6; v += 2) {
    for (const auto& g : EnumerateGenerators(v, 3 * v / 2, true)) {
      for (Parity p : kParities) {
        const auto base = Canonicalize(g, p);
        for (int trial = 0; trial < 5; ++trial) {
          GraphIso alpha;
          const auto h = fixtures::RandomRelabel(g, rng, &alpha);
          const auto c = Canonicalize(h, p);
          EXPECT_EQ(c.canonical.representative, base.canonical.representative);
          EXPECT_EQ(CanonicalKey(h), CanonicalKey(g));
          EXPECT_EQ(c.sign, base.sign * RelationSign(alpha, p));
          EXPECT_TRUE(IsIsomorphism(h, c.canonical.representative,
                                    c.to_representative));
        }
      }
    }
  }
}

TEST(GraphComplex, BasisExamples) {
  const auto odd = EnumerateBasis(2, 3, Parity::kOdd, true);
  ASSERT_EQ(odd.size(), 1u);
  EXPECT_FALSE(FindIsomorphisms(odd[0].representative, Theta()).empty());
  EXPECT_TRUE(EnumerateBasis(2, 3, Parity::kEven, true).empty());
  for (Parity p : kParities) EXPECT_TRUE(EnumerateBasis(1, 1, p, true).empty());
}

TEST(GraphComplex, GeneratorsMatchExhaustiveOracle) {
  for (int g = 2; g <= 4; ++g) {
    for (int v = 1; v <= std::min(5, 2 * (g - 1)); ++v) {
      for (bool loops : {true, false}) {
        const auto mine = EnumerateGenerators(v, v + g - 1, loops);
        const auto theirs = oracle::Classes(v, v + g - 1, loops);
        ASSERT_EQ(mine.size(), theirs.size()) << v << "," << v + g - 1;
        for (const auto& t : theirs) {
          int matches = 0;
          for (const auto& m : mine) matches += !oracle::Isomorphisms(m, t).empty();
          EXPECT_EQ(matches, 1);
        }
        for (Parity p : kParities) {
          std::size_t nonzero = 0;
          for (const auto& t : theirs) nonzero += !oracle::IsZeroClass(t, p);
          EXPECT_EQ(EnumerateBasis(v, v + g - 1, p, loops).size(), nonzero);
        }
      }
    }
  }
}

TEST(GraphComplex, TrivalentBasesHaveTrivalentGraphs) {
  for (int v = 2; v <= 6; v += 2) {
    for (Parity p : kParities) {
      for (const auto& c : EnumerateBasis(v, 3 * v / 2, p, true)) {
        EXPECT_EQ(2 * c.representative.edge_count(),
                  3 * c.representative.vertex_count());
        EXPECT_FALSE(c.zero);
      }
    }
  }
}

TEST(GraphComplex, SerialAndParallelAgree) {
  for (Parity p : kParities) {
    for (int v = 3; v <= 6; ++v) {
      const int e = v + 3;
      const auto serial = GraphBasis::Enumerate(v, e, p, true, Execution::kSerial);
      const auto parallel =
          GraphBasis::Enumerate(v, e, p, true, Execution::kParallel);
      EXPECT_EQ(serial.classes(), parallel.classes());
      const auto target = GraphBasis::Enumerate(v - 1, e - 1, p, true);
      EXPECT_EQ(BoundaryMatrix(serial, target, Execution::kSerial),
                BoundaryMatrix(serial, target, Execution::kParallel));
    }
  }
}

TEST(GraphComplex, ThetaBoundaryIsZero) {
  const auto source = GraphBasis::Enumerate(2, 3, Parity::kOdd, true);
  const auto target = GraphBasis::Enumerate(1, 2, Parity::kOdd, true);
  const auto m = BoundaryMatrix(source, target);
  EXPECT_EQ(m.cols(), 1u);
  EXPECT_TRUE(m.IsZero());
  const auto empty = GraphBasis::Enumerate(2, 3, Parity::kEven, true);
  EXPECT_EQ(BoundaryMatrix(empty, GraphBasis::Enumerate(1, 2, Parity::kEven, true))
                .cols(),
            0u);
}

TEST(GraphComplex, CoefficientMatchesOracle) {
  std::mt19937_64 rng(33);
  for (const auto& g : EnumerateGenerators(4, 7, true)) {
    const auto h = fixtures::RandomRelabel(g, rng);
    for (int e = 0; e < h.edge_count(); ++e) {
      if (h.edge(e).IsLoop()) continue;
      for (Parity p : kParities) {
        EXPECT_EQ(ContractionCoefficient(h, e, p), oracle::Coefficient(h, e, p));
      }
    }
  }
}

// Reversing one edge negates the graph, so its boundary must flip too.
TEST(GraphComplex, BoundaryRespectsEdgeReversal) {
  for (const auto& g : EnumerateGenerators(4, 6, false)) {
    for (int e = 0; e < g.edge_count(); ++e) {
      std::vector<int> vmap(g.vertex_count()), emap(g.edge_count());
      std::iota(vmap.begin(), vmap.end(), 0);
      std::iota(emap.begin(), emap.end(), 0);
      std::vector<bool> rev(g.edge_count());
      rev[e] = true;
      const auto h = Relabel(g, vmap, emap, rev);
      EXPECT_TRUE(
          CheckClosed({{SumTerm{1, g}, SumTerm{1, h}}}, Parity::kOdd).residual.empty());
    }
  }
}

TEST(GraphComplex, BoundaryMatchesOracle) {
  for (Parity p : kParities) {
    for (int g = 2; g <= 4; ++g) {
      for (int v = 2; v <= 2 * (g - 1); ++v) {
        const auto source = GraphBasis::Enumerate(v, v + g - 1, p, true);
        const auto target = GraphBasis::Enumerate(v - 1, v + g - 2, p, true);
        const auto mine = BoundaryMatrix(source, target).ToDense();
        const auto theirs = oracle::Boundary(Reps(source), Reps(target), p);
        ASSERT_EQ(mine.size(), theirs.size());
        for (std::size_t i = 0; i < mine.size(); ++i) {
          for (std::size_t j = 0; j < mine[i].size(); ++j) {
            EXPECT_EQ(mine[i][j], static_cast<long>(theirs[i][j]));
          }
        }
      }
    }
  }
}

TEST(GraphComplex, BoundarySquaresToZero) {
  for (Parity p : kParities) {
    for (int g = 2; g <= 5; ++g) {
      std::vector<GraphBasis> chain;
      for (int v = 1; v <= std::min(6, 2 * (g - 1)); ++v) {
        chain.push_back(GraphBasis::Enumerate(v, v + g - 1, p, true));
      }
      for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
        EXPECT_TRUE(Multiply(BoundaryMatrix(chain[i + 1], chain[i]),
                             BoundaryMatrix(chain[i + 2], chain[i + 1]))
                        .IsZero());
      }
    }
  }
}

TEST(GraphComplex, BoundaryMismatchDetected) {
  const auto source = GraphBasis::Enumerate(4, 6, Parity::kOdd, true);
  const GraphBasis wrong(3, 5, Parity::kOdd, {});
  try {
    BoundaryMatrix(source, wrong);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBasisMismatch);
  }
}

TEST(GraphComplex, HomologyOfTheta) {
  const auto table = HomologyForLoopOrder(2, Parity::kOdd, Ring::kRationals, true);
  std::size_t total = 0;
  for (const auto& h : table.groups) {
    if (h.vertices == 2) EXPECT_EQ(h.betti, 1u);
    total += h.betti;
  }
  EXPECT_EQ(total, 1u);
}

TEST(GraphComplex, HomologyRanksAndEulerCharacteristic) {
  for (Parity p : kParities) {
    for (Ring ring : {Ring::kRationals, Ring::kIntegers}) {
      for (int g = 2; g <= 4; ++g) {
        const auto table = HomologyForLoopOrder(g, p, ring, true);
        long long chi_chain = 0, chi_homology = 0;
        for (const auto& h : table.groups) {
          const int sign = h.vertices % 2 ? -1 : 1;
          chi_chain += sign * static_cast<long long>(h.chain_rank);
          chi_homology += sign * static_cast<long long>(h.betti);
          EXPECT_EQ(h.betti + h.boundary_rank_out + h.boundary_rank_in,
                    h.chain_rank);
        }
        EXPECT_EQ(chi_chain, chi_homology);
      }
    }
  }
}

TEST(GraphComplex, HomologyWithZeroMaps) {
  std::vector<GraphBasis> chain = {GraphBasis::Enumerate(2, 3, Parity::kOdd, true)};
  const auto table = ComputeHomology(chain, Ring::kRationals);
  ASSERT_EQ(table.groups.size(), 1u);
  EXPECT_EQ(table.groups[0].betti, 1u);
}

TEST(GraphComplex, CheckClosedExamples) {
  EXPECT_TRUE(CheckClosed({{SumTerm{1, Theta()}}}, Parity::kOdd).closed);
  const auto even = CheckClosed({{SumTerm{1, Theta()}}}, Parity::kEven);
  EXPECT_TRUE(even.closed);
  EXPECT_FALSE(even.warnings.empty());

  const auto source = GraphBasis::Enumerate(4, 6, Parity::kOdd, true);
  const auto target = GraphBasis::Enumerate(3, 5, Parity::kOdd, true);
  const auto m = BoundaryMatrix(source, target).ToDense();
  bool found = false;
  for (std::size_t j = 0; j < source.size(); ++j) {
    bool zero = true;
    for (const auto& row : m) zero &= row[j] == 0;
    if (zero) continue;
    const auto check =
        CheckClosed({{SumTerm{1, source[j].representative}}}, Parity::kOdd);
    EXPECT_FALSE(check.closed);
    EXPECT_FALSE(check.residual.empty());
    found = true;
  }
  EXPECT_TRUE(found);
}

TEST(GraphComplex, CheckClosedRejectsMixedBidegrees) {
  try {
    CheckClosed({{SumTerm{1, Theta()}, SumTerm{1, K4()}}}, Parity::kOdd);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedBidegree);
  }
}

TEST(GraphComplex, PairingExamples) {
  EXPECT_TRUE(ComputeGammaPairing({{SumTerm{1, Theta()}}}, Parity::kOdd)
                  .pairs.empty());
  try {
    ComputeGammaPairing({{SumTerm{1, K4()}}}, Parity::kOdd);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotClosed);
  }
}

void ExpectCompletePairing(const SignedGraphSum& sum, Parity p) {
  const auto pairing = ComputeGammaPairing(sum, p);
  std::map<std::pair<int, int>, int> seen;
  for (const auto& entry : pairing.pairs) {
    EXPECT_TRUE(PairSignConditionHolds(pairing.terms, entry, p));
    EXPECT_TRUE(oracle::PairConditionHolds(pairing.terms, entry, p));
    ++seen[{entry.term_a, entry.edge_i}];
    if (entry.term_a != entry.term_b || entry.edge_i != entry.edge_j) {
      ++seen[{entry.term_b, entry.edge_j}];
    }
  }
  for (int a = 0; a < static_cast<int>(pairing.terms.size()); ++a) {
    const auto& g = pairing.terms[a];
    for (int e = 0; e < g.edge_count(); ++e) {
      const bool live = !g.edge(e).IsLoop() &&
                        !oracle::IsZeroClass(oracle::Contract(g, e), p);
      const auto it = seen.find({a, e});
      EXPECT_EQ(it == seen.end() ? 0 : it->second, live ? 1 : 0);
    }
  }
}

TEST(GraphComplex, KernelVectorsPairCompletely) {
  for (Parity p : kParities) {
    for (int v : {4, 6}) {
      const auto source = GraphBasis::Enumerate(v, 3 * v / 2, p, true);
      const auto target = GraphBasis::Enumerate(v - 1, 3 * v / 2 - 1, p, true);
      for (const auto& k : RationalKernelBasis(BoundaryMatrix(source, target))) {
        SignedGraphSum sum;
        for (std::size_t i = 0; i < k.size(); ++i) {
          if (k[i] != 0) sum.terms.push_back({k[i].get_si(), source[i].representative});
        }
        EXPECT_TRUE(CheckClosed(sum, p).closed);
        ExpectCompletePairing(sum, p);
      }
    }
  }
}

TEST(GraphComplex, RelabeledSumsStillPair) {
  std::mt19937_64 rng(32);
  const auto source = GraphBasis::Enumerate(4, 6, Parity::kOdd, true);
  const auto target = GraphBasis::Enumerate(3, 5, Parity::kOdd, true);
  for (const auto& k : RationalKernelBasis(BoundaryMatrix(source, target))) {
    SignedGraphSum sum;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      GraphIso alpha;
      const auto h = fixtures::RandomRelabel(source[i].representative, rng, &alpha);
      sum.terms.push_back(
          {k[i].get_si() * RelationSign(alpha, Parity::kOdd), h});
    }
    EXPECT_TRUE(CheckClosed(sum, Parity::kOdd).closed);
    ExpectCompletePairing(sum, Parity::kOdd);
  }
}

}  // namespace
}  // namespace gcx
