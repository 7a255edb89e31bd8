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

#include "gcx/selftest.hpp"

#include <functional>
#include <set>

#include "gcx/graph_complex.hpp"
#include "gcx/intlinalg.hpp"
#include "gcx/strata.hpp"

namespace gcx {
namespace {

const DirectedOrderedGraph& Theta() {
  static const DirectedOrderedGraph g(2, {{0, 1}, {0, 1}, {0, 1}});
  return g;
}

const DirectedOrderedGraph& K4() {
  static const DirectedOrderedGraph g(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  return g;
}

std::vector<DirectedOrderedGraph> Generators(int max_loop_order) {
  std::vector<DirectedOrderedGraph> out;
  for (int g = 2; g <= max_loop_order; ++g) {
    for (int v = 1; v <= 2 * (g - 1); ++v) {
      for (auto& graph : EnumerateGenerators(v, v + g - 1, true)) {
        out.push_back(std::move(graph));
      }
    }
  }
  return out;
}

SelfTestResult Run(const std::string& name,
                   const std::function<std::string()>& body) {
  try {
    std::string failure = body();
    return {name, failure.empty(), failure.empty() ? "ok" : failure};
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

}  // namespace

std::vector<SelfTestResult> RunSelfTest(int max_loop_order) {
  std::vector<SelfTestResult> results;
  const auto generators = Generators(max_loop_order);

  results.push_back(Run("boundary squares to zero", [&]() -> std::string {
    for (Parity p : {Parity::kOdd, Parity::kEven}) {
      for (int g = 2; g <= max_loop_order; ++g) {
        std::vector<GraphBasis> chain;
        for (int v = 1; v <= 2 * (g - 1); ++v) {
          chain.push_back(GraphBasis::Enumerate(v, v + g - 1, p, true));
        }
        for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
          const auto outer = BoundaryMatrix(chain[i + 1], chain[i]);
          const auto inner = BoundaryMatrix(chain[i + 2], chain[i + 1]);
          if (!Multiply(outer, inner).IsZero()) {
            return "nonzero composite at loop order " + std::to_string(g);
          }
        }
      }
    }
    return "";
  }));

  results.push_back(Run("theta certificate", [&]() -> std::string {
    if (EnumerateBasis(2, 3, Parity::kOdd, true).size() != 1) return "odd basis";
    if (!EnumerateBasis(2, 3, Parity::kEven, true).empty()) return "even basis";
    if (!CheckClosed({{SumTerm{1, Theta()}}}, Parity::kOdd).closed) {
      return "theta not closed";
    }
    if (MakeDimensionReport(Theta(), 3).degree != 0) return "degree at d=3";
    if (MakeDimensionReport(Theta(), 4).degree != 1) return "degree at d=4";
    return "";
  }));

  results.push_back(Run("signed permutation group orders", [&]() -> std::string {
    long long expected = 1;
    for (int n = 0; n <= 4; ++n) {
      if (n > 0) expected *= 2LL * n;
      const auto all = EnumerateSignedPermutations(n);
      const std::set<SignedPermutation> distinct(all.begin(), all.end());
      if (static_cast<long long>(distinct.size()) != expected) {
        return "wrong order for n=" + std::to_string(n);
      }
    }
    return "";
  }));

  results.push_back(Run("automorphism counts", [&]() -> std::string {
    if (AutGroup(Theta()).size() != 12) return "Aut(theta)";
    if (AutGroup(K4()).size() != 24) return "Aut(K4)";
    if (SignedAutCount(Theta(), 3) != 12) return "signed count d=3";
    if (SignedAutCount(Theta(), 4) != 0) return "signed count d=4";
    return "";
  }));

  results.push_back(Run("psi injective and commuting identity",
                        [&]() -> std::string {
    for (const auto& g : generators) {
      std::set<SignedPermutation> images;
      const auto group = AutGroup(g);
      for (const auto& a : group) {
        images.insert(PsiGamma(g, a));
        if (!EdgeTupleActionCheck(g, a)) return "commuting identity fails";
      }
      if (images.size() != group.size()) return "psi not injective";
    }
    return "";
  }));

  results.push_back(Run("Smith rank matches rational rank", [&]() -> std::string {
    for (Parity p : {Parity::kOdd, Parity::kEven}) {
      for (int g = 2; g <= max_loop_order; ++g) {
        for (int v = 2; v <= 2 * (g - 1); ++v) {
          const auto m = BoundaryMatrix(
              GraphBasis::Enumerate(v, v + g - 1, p, true),
              GraphBasis::Enumerate(v - 1, v + g - 2, p, true));
          if (SmithNormalForm(m).rank != RationalRank(m)) return "rank mismatch";
        }
      }
    }
    return "";
  }));

  results.push_back(Run("kernel pairings satisfy the sign condition",
                        [&]() -> std::string {
    for (Parity p : {Parity::kOdd, Parity::kEven}) {
      for (int g = 2; g <= max_loop_order; ++g) {
        const int v = 2 * (g - 1);
        const auto source = GraphBasis::Enumerate(v, v + g - 1, p, true);
        const auto target = GraphBasis::Enumerate(v - 1, v + g - 2, p, true);
        for (const auto& kernel :
             RationalKernelBasis(BoundaryMatrix(source, target))) {
          SignedGraphSum sum;
          for (std::size_t i = 0; i < kernel.size(); ++i) {
            if (kernel[i] != 0) {
              sum.terms.push_back({kernel[i].get_si(), source[i].representative});
            }
          }
          const auto pairing = ComputeGammaPairing(sum, p);
          for (const auto& entry : pairing.pairs) {
            if (!PairSignConditionHolds(pairing.terms, entry, p)) {
              return "sign condition fails";
            }
          }
        }
      }
    }
    return "";
  }));

  results.push_back(Run("stratum audits", [&]() -> std::string {
    for (int d : {3, 5}) {
      if (!CancellationAudit(Theta(), Parity::kOdd, d, SgnPrimeMode::kLiteral)
               .passed()) {
        return "theta audit";
      }
    }
    if (!CancellationAudit(K4(), Parity::kEven, 4, SgnPrimeMode::kLiteral)
             .passed()) {
      return "K4 audit";
    }
    return "";
  }));
  return results;
}

}  // namespace gcx
