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

#ifndef GCX_STRATA_HPP_
#define GCX_STRATA_HPP_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gcx/graph.hpp"
#include "gcx/graph_complex.hpp"
#include "gcx/parallel.hpp"
#include "gcx/signed_perm.hpp"

namespace gcx {

// A subset A of {inf} u V(Gamma). As labels, inf is 0 and vertex index v is
// v + 1.
struct StratumSubset {
  bool infinity = false;
  std::vector<int> vertices;  // sorted vertex indices

  int size() const { return static_cast<int>(vertices.size()) + infinity; }

  static StratumSubset FromLabels(std::vector<int> labels);
  std::vector<int> Labels() const;
  // Bit 0 is inf, bit k is the vertex labelled k.
  static StratumSubset FromMask(unsigned long long mask);

  friend bool operator==(const StratumSubset&, const StratumSubset&) = default;
  friend auto operator<=>(const StratumSubset&, const StratumSubset&) = default;
};

struct SubgraphQuotient {
  DirectedOrderedGraph gamma_a;
  DirectedOrderedGraph gamma_mod_a;
};

// Gamma_A and Gamma/Gamma_A. Without inf these are the spanned subgraph and
// the quotient collapsing it; with inf the roles swap onto A - inf.
// Throws kSubsetTooSmall, kLabelOutOfRange.
SubgraphQuotient SubgraphAndQuotient(const DirectedOrderedGraph& g,
                                     const StratumSubset& a);

enum class StratumType { kType1 = 1, kType2 = 2, kType3 = 3, kType4 = 4 };

// Valences are taken inside Gamma_A (a loop counts twice). When inf is in A
// the front vertex of Gamma_A is the cluster at inf and is not inspected.
//   type 1: a vertex of valence <= 1, and |A| >= 3 or Gamma_A has no edge
//   type 2: a bivalent vertex and no vertex of valence <= 1
//   type 3: every vertex of valence >= 3
//   type 4: two vertices joined by a single edge and nothing else
// Throws kUnclassifiable unless exactly one clause applies.
StratumType Classify(const DirectedOrderedGraph& g, const StratumSubset& a);

struct TypeTwoData {
  int bivalent_vertex = 0;  // lowest bivalent vertex of Gamma_A
  int first_edge = 0;
  int second_edge = 0;      // equals first_edge for a bivalent loop vertex
  bool loop_degenerate = false;
  SignedPermutation sigma;
};

// sigma_A on E(Gamma). Throws kNotTypeTwo.
TypeTwoData SigmaA(const DirectedOrderedGraph& g, const StratumSubset& a);

// sigma_{e1 e2}: e1 -> e2 unflipped, every other edge follows the witness
// Gamma/e1 -> Gamma/e2 under E(Gamma) - {e} = E(Gamma/e), flipped when the
// witness reverses it. Throws kNotAPair unless both edges are non-loops and
// the witness is an isomorphism of the contractions.
SignedPermutation SigmaPair(const DirectedOrderedGraph& g, int e1, int e2,
                            const GraphIso& witness);

enum class ChamberMode { kStrict, kRelaxed };

struct ChamberResult {
  bool in_image = false;
  std::optional<GraphIso> witness;
  // sgn(witness, vertex)^d when in the image.
  int orientation_sign = 1;
};

// Decides whether `s` is psi_Gamma of an automorphism by exhaustive
// comparison. Strict mode throws kRepeatedEdgesStrictMode on graphs with
// parallel edges.
ChamberResult ChamberClassify(const DirectedOrderedGraph& g,
                              const SignedPermutation& s, int d,
                              ChamberMode mode);

// (-1)^((d-1) e + d e') with e, e' the parities of sgn(s), sgn'(s).
int OrientationTwist(const SignedPermutation& s, int d, SgnPrimeMode mode);

struct SubsetDimensions {
  StratumSubset subset;
  StratumType type = StratumType::kType1;
  int vertices_a = 0;
  int edges_a = 0;
  // Vertices of Gamma_A other than the cluster at inf.
  int free_vertices = 0;
  // d |V(Gamma_A)| - d - 1
  long long fiber_dimension = 0;
  // Type 3 only, both sides scaled by 3 to stay integral, n = free_vertices:
  //   3 (d n - d - 1) <= 2d |E_A| - 3(d + 1)  <= 3 ((d-1)|E_A| - 4)
  bool type3 = false;
  long long type3_lhs = 0;
  long long type3_rhs = 0;
  long long sphere_bound = 0;
  bool type3_holds = true;
  bool codimension_holds = true;
};

struct DimensionReport {
  int d = 3;
  // |E|(d - 1) - d |V|
  long long degree = 0;
  long long total_dimension = 0;  // d |V|
  bool trivalent_identity_holds = false;
  std::vector<SubsetDimensions> subsets;
};

// Throws kNotTrivalent, kInvalidArgument (d < 3), kUnclassifiable.
DimensionReport MakeDimensionReport(const DirectedOrderedGraph& g, int d,
                                    Execution execution = Execution::kParallel);

struct StratumRecord {
  StratumSubset subset;
  DirectedOrderedGraph gamma_a;
  DirectedOrderedGraph gamma_mod_a;
  std::optional<StratumType> type;
  SubsetDimensions dimensions;
  std::optional<TypeTwoData> type_two;
  // Type 4: the contracted edge, its partner and sigma_{e e'}.
  std::optional<int> edge;
  std::optional<int> partner_edge;
  std::optional<StratumSubset> partner;
  std::optional<GraphIso> witness;
  std::optional<SignedPermutation> sigma_pair;
  std::optional<int> bookkeeping_sign;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct AuditReport {
  DirectedOrderedGraph graph;
  Parity parity = Parity::kOdd;
  int d = 3;
  SgnPrimeMode sgn_prime_mode = SgnPrimeMode::kLiteral;
  long long degree = 0;
  long long total_dimension = 0;
  std::array<std::size_t, 4> type_counts{};
  std::vector<StratumRecord> records;
  GammaPairing pairing;
  // Pairs between contraction terms that are not type-4 strata.
  std::vector<PairingEntry> non_stratum_pairs;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool passed() const;
  std::vector<std::string> AllFailures() const;
};

// Audits every A with |A| >= 2 of a closed trivalent graph: the
// classification, sigma_A for type 2, the Gamma-pair data for type 4 and the
// type-3 dimension inequality. Throws kNotTrivalent, kNotClosed; a report
// with failures corresponds to kAuditFailure.
AuditReport CancellationAudit(const DirectedOrderedGraph& g, Parity parity,
                              int d, SgnPrimeMode mode,
                              Execution execution = Execution::kParallel);

}  // namespace gcx

#endif  // GCX_STRATA_HPP_
