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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gcx/graph_complex.hpp"
#include "gcx/intlinalg.hpp"
#include "gcx/signed_perm.hpp"
#include "gcx/strata.hpp"
#include "oracles.hpp"

namespace {

using namespace gcx;

constexpr Parity kParities[] = {Parity::kOdd, Parity::kEven};
constexpr int kMaxLoopOrder = 8;

struct Bidegree {
  int v;
  int e;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

// Sources of the boundary maps under test: trivalent with |V| <= 6, and
// every min-valence-3 bidegree with |V| <= 5 up to kMaxLoopOrder.
std::set<Bidegree> SourceBidegrees() {
  std::set<Bidegree> out;
  for (int v = 2; v <= 6; v += 2) out.insert({v, 3 * v / 2});
  for (int g = 2; g <= kMaxLoopOrder; ++g) {
    for (int v = 1; v <= std::min(5, 2 * (g - 1)); ++v) out.insert({v, v + g - 1});
  }
  return out;
}

class BasisCache {
 public:
  const GraphBasis& Get(int v, int e, Parity p) {
    const auto key = std::make_tuple(v, e, p);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, GraphBasis::Enumerate(v, e, p, true)).first;
    }
    return it->second;
  }

 private:
  std::map<std::tuple<int, int, Parity>, GraphBasis> cache_;
};

BasisCache& Bases() {
  static BasisCache cache;
  return cache;
}

std::string Criterion1() {
  std::size_t products = 0;
  for (Parity p : kParities) {
    for (const auto& b : SourceBidegrees()) {
      if (b.v < 3) continue;
      const auto& c0 = Bases().Get(b.v, b.e, p);
      const auto& c1 = Bases().Get(b.v - 1, b.e - 1, p);
      const auto& c2 = Bases().Get(b.v - 2, b.e - 2, p);
      if (!Multiply(BoundaryMatrix(c1, c2), BoundaryMatrix(c0, c1)).IsZero()) {
        return "nonzero product at (" + std::to_string(b.v) + "," +
               std::to_string(b.e) + ")";
      }
      ++products;
    }
  }
  return "ok: " + std::to_string(products) + " products";
}

std::string Criterion2() {
  const auto odd = EnumerateBasis(2, 3, Parity::kOdd, true);
  if (odd.size() != 1 ||
      !oracle::IsIsomorphism(odd[0].representative, fixtures::Theta(),
                             oracle::Isomorphisms(odd[0].representative,
                                                  fixtures::Theta())
                                 .front())) {
    return "odd basis is not {Theta}";
  }
  if (!EnumerateBasis(2, 3, Parity::kEven, true).empty()) return "even basis nonempty";
  if (!CheckClosed({{SumTerm{1, fixtures::Theta()}}}, Parity::kOdd).closed) {
    return "Theta not closed";
  }
  if (MakeDimensionReport(fixtures::Theta(), 3).degree != 0) return "degree d=3";
  if (MakeDimensionReport(fixtures::Theta(), 4).degree != 1) return "degree d=4";
  return "ok";
}

std::string Criterion3() {
  std::size_t vectors = 0, pairs = 0;
  for (Parity p : kParities) {
    for (int v = 2; v <= 6; ++v) {
      for (int g = 2; g <= kMaxLoopOrder; ++g) {
        const int e = v + g - 1;
        if (v > 2 * (g - 1)) continue;
        if (v == 6 && 2 * e != 3 * v) continue;
        if (v <= 5 && !SourceBidegrees().contains({v, e})) continue;
        const auto& source = Bases().Get(v, e, p);
        const auto& target = Bases().Get(v - 1, e - 1, p);
        for (const auto& k : RationalKernelBasis(BoundaryMatrix(source, target))) {
          SignedGraphSum sum;
          for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] != 0) sum.terms.push_back({k[i].get_si(), source[i].representative});
          }
          const auto pairing = ComputeGammaPairing(sum, p);
          std::map<std::pair<int, int>, int> seen;
          for (const auto& entry : pairing.pairs) {
            if (!oracle::PairConditionHolds(pairing.terms, entry, p)) {
              return "sign condition fails at (" + std::to_string(v) + "," +
                     std::to_string(e) + ")";
            }
            ++seen[{entry.term_a, entry.edge_i}];
            if (entry.term_a != entry.term_b || entry.edge_i != entry.edge_j) {
              ++seen[{entry.term_b, entry.edge_j}];
            }
            ++pairs;
          }
          for (int t = 0; t < static_cast<int>(pairing.terms.size()); ++t) {
            const auto& h = pairing.terms[t];
            for (int x = 0; x < h.edge_count(); ++x) {
              const bool live =
                  !h.edge(x).IsLoop() && !oracle::IsZeroClass(oracle::Contract(h, x), p);
              const auto it = seen.find({t, x});
              if ((it == seen.end() ? 0 : it->second) != (live ? 1 : 0)) {
                return "contraction term not covered exactly once";
              }
            }
          }
          ++vectors;
        }
      }
    }
  }
  return "ok: " + std::to_string(vectors) + " kernel vectors, " +
         std::to_string(pairs) + " pairs";
}

// Closed single graphs plus loop-free zero classes (closed trivially).
std::string Criterion4() {
  std::size_t audited = 0, strata = 0;
  for (int d = 3; d <= 5; ++d) {
    const Parity p = ParityOf(d);
    for (int v = 2; v <= 6; v += 2) {
      for (const auto& g : EnumerateGenerators(v, 3 * v / 2, true)) {
        const bool zero = oracle::IsZeroClass(g, p);
        if (zero && g.HasLoop()) continue;
        if (!zero && !CheckClosed({{SumTerm{1, g}}}, p).closed) continue;
        for (auto mode : {SgnPrimeMode::kLiteral, SgnPrimeMode::kAllFlips}) {
          const auto report = CancellationAudit(g, p, d, mode);
          if (!report.passed()) {
            return "audit failed: " + report.AllFailures().front();
          }
          for (const auto& rec : report.records) {
            if (rec.subset.infinity && rec.type != StratumType::kType3) {
              return "infinity subset not type 3";
            }
            if (rec.type == StratumType::kType4) {
              const auto& reverse = *std::find_if(
                  report.records.begin(), report.records.end(),
                  [&](const StratumRecord& r) { return r.subset == *rec.partner; });
              if (*reverse.sigma_pair != Inverse(*rec.sigma_pair)) {
                return "sigma pair not inverse";
              }
            }
          }
          strata += report.records.size();
          ++audited;
        }
      }
    }
  }
  return "ok: " + std::to_string(audited) + " audits, " + std::to_string(strata) +
         " strata";
}

std::vector<DirectedOrderedGraph> AllGenerators() {
  std::vector<DirectedOrderedGraph> out;
  std::set<Bidegree> all = SourceBidegrees();
  for (const auto& b : SourceBidegrees()) {
    if (b.v > 1) all.insert({b.v - 1, b.e - 1});
  }
  for (const auto& b : all) {
    const auto gens = EnumerateGenerators(b.v, b.e, true);
    out.insert(out.end(), gens.begin(), gens.end());
  }
  return out;
}

std::string Criterion5() {
  for (int n = 0; n <= 4; ++n) {
    long long expected = 1;
    for (int i = 1; i <= n; ++i) expected *= 2 * i;
    const auto all = EnumerateSignedPermutations(n);
    if (static_cast<long long>(std::set(all.begin(), all.end()).size()) != expected) {
      return "|S~_" + std::to_string(n) + "| wrong";
    }
  }
  std::size_t graphs = 0;
  for (const auto& g : AllGenerators()) {
    std::set<SignedPermutation> images;
    const auto group = AutGroup(g);
    for (const auto& a : group) images.insert(PsiGamma(g, a));
    if (images.size() != group.size()) return "psi not injective";
    ++graphs;
  }
  const auto theta = fixtures::Theta();
  if (oracle::SignedAutCount(theta, 3) != 12 || SignedAutCount(theta, 3) != 12) {
    return "signed count d=3";
  }
  if (oracle::SignedAutCount(theta, 4) != 0 || SignedAutCount(theta, 4) != 0) {
    return "signed count d=4";
  }
  return "ok: psi injective on " + std::to_string(graphs) + " graphs";
}

std::string Criterion6() {
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = oracle::RandomMatrix(rng, dim(rng), dim(rng), 9);
    const auto snf = SmithNormalForm(SparseIntMatrix::FromDense(d));
    if (snf.invariant_factors != oracle::InvariantFactorsByMinors(d)) {
      return "trial " + std::to_string(trial) + " disagrees";
    }
  }
  return "ok: 200 trials";
}

std::string Criterion7() {
  std::size_t checks = 0;
  for (const auto& g : AllGenerators()) {
    for (const auto& a : AutGroup(g)) {
      if (!EdgeTupleActionCheck(g, a)) return "identity fails";
      ++checks;
    }
  }
  return "ok: " + std::to_string(checks) + " automorphisms";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"delta squared is zero", Criterion1},
      {"Theta certificate", Criterion2},
      {"pairing soundness", Criterion3},
      {"stratum calculus", Criterion4},
      {"group theory", Criterion5},
      {"Smith normal form vs minors", Criterion6},
      {"commuting identity", Criterion7},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = criteria[i].second();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const bool ok = detail.rfind("ok", 0) == 0;
    all &= ok;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%s, %.2fs)\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
