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

#ifndef GCX_GRAPH_COMPLEX_HPP_
#define GCX_GRAPH_COMPLEX_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcx/graph.hpp"
#include "gcx/intlinalg.hpp"
#include "gcx/parallel.hpp"

namespace gcx {

// An isomorphism class of graphs modulo ~odd or ~even.
//
// The representative is the graph whose vertex order minimises the
// multiplicity encoding (see CanonicalKey) among orders with ascending
// valence; its edges are listed in lexicographic order of (tail, head) with
// tail <= head. `zero` is set when some automorphism has relation sign -1,
// in which case the class equals its own negative.
struct CanonicalClass {
  DirectedOrderedGraph representative;
  Parity parity = Parity::kOdd;
  bool zero = false;

  friend bool operator==(const CanonicalClass&,
                         const CanonicalClass&) = default;
};

struct Canonicalization {
  // g = sign * representative in the quotient; 0 when the class is zero.
  int sign = 0;
  CanonicalClass canonical;
  // An isomorphism g -> representative.
  GraphIso to_representative;
};

Canonicalization Canonicalize(const DirectedOrderedGraph& g, Parity parity);

// Byte string identifying the isomorphism class: vertex count followed by
// the multiplicity matrix of the representative, upper triangle read column
// by column. Enumeration order is ascending key.
std::string CanonicalKey(const DirectedOrderedGraph& g);

// Canonical representatives of every isomorphism class of connected graphs
// with all valences >= 3, zero classes included, in ascending key order.
std::vector<DirectedOrderedGraph> EnumerateGenerators(
    int vertices, int edges, bool allow_loops,
    Execution execution = Execution::kParallel);

// Connected, min-valence-3 isomorphism classes with `vertices` vertices and
// `edges` edges whose zero flag is false, in ascending key order.
std::vector<CanonicalClass> EnumerateBasis(
    int vertices, int edges, Parity parity, bool allow_loops,
    Execution execution = Execution::kParallel);

// An enumerated basis with key lookup.
class GraphBasis {
 public:
  GraphBasis(int vertices, int edges, Parity parity,
             std::vector<CanonicalClass> classes);

  static GraphBasis Enumerate(int vertices, int edges, Parity parity,
                              bool allow_loops,
                              Execution execution = Execution::kParallel);

  int vertices() const { return vertices_; }
  int edges() const { return edges_; }
  Parity parity() const { return parity_; }
  std::size_t size() const { return classes_.size(); }
  const std::vector<CanonicalClass>& classes() const { return classes_; }
  const CanonicalClass& operator[](std::size_t i) const { return classes_[i]; }
  std::optional<std::size_t> Find(const std::string& key) const;

 private:
  int vertices_;
  int edges_;
  Parity parity_;
  std::vector<CanonicalClass> classes_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Coefficient of Gamma/e in the boundary of Gamma:
//   odd:  (-1)^(o(head) - o(tail)), negated when o(head) < o(tail),
//   even: (-1)^(o(e)).
// Without the negation the odd rule would not respect edge reversal;
// representatives only carry forward edges, where the two agree.
int ContractionCoefficient(const DirectedOrderedGraph& g, int edge,
                           Parity parity);

// Column j is the boundary of source[j] expanded in `target`; self-loop
// edges contribute nothing. Throws kBasisMismatch if a nonzero contraction
// is missing from `target` or the bidegrees do not line up.
SparseIntMatrix BoundaryMatrix(const GraphBasis& source,
                               const GraphBasis& target,
                               Execution execution = Execution::kParallel);

enum class Ring { kRationals, kIntegers };

struct HomologyGroup {
  int vertices = 0;
  int edges = 0;
  std::size_t chain_rank = 0;
  // Ranks of the outgoing and incoming boundary maps.
  std::size_t boundary_rank_out = 0;
  std::size_t boundary_rank_in = 0;
  std::size_t betti = 0;
  // Invariant factors > 1 of the incoming boundary (integer ring only).
  std::vector<Integer> torsion;
};

struct HomologyTable {
  Parity parity = Parity::kOdd;
  Ring ring = Ring::kRationals;
  int loop_order = 0;
  bool allow_loops = true;
  std::vector<HomologyGroup> groups;
  std::vector<std::string> notes;
};

// Homology of a chain complex given by consecutive bases with vertex counts
// v0, v0+1, ... and constant loop order; boundaries lower v by one.
HomologyTable ComputeHomology(const std::vector<GraphBasis>& chain, Ring ring,
                              Execution execution = Execution::kParallel);

// All bidegrees (v, v + loop_order - 1) with 1 <= v <= 2 (loop_order - 1).
HomologyTable HomologyForLoopOrder(int loop_order, Parity parity, Ring ring,
                                   bool allow_loops,
                                   Execution execution = Execution::kParallel);

struct SumTerm {
  long long coefficient = 1;
  DirectedOrderedGraph graph;
};

// A formal integer combination of generator graphs.
struct SignedGraphSum {
  std::vector<SumTerm> terms;
};

struct ResidualTerm {
  Integer coefficient;
  DirectedOrderedGraph representative;
};

struct ClosedCheck {
  bool closed = false;
  // Nonzero coefficients of the boundary in the canonical basis, ascending
  // key order.
  std::vector<ResidualTerm> residual;
  std::size_t omitted_loop_terms = 0;
  std::vector<std::string> warnings;
};

// Throws kMixedBidegree when terms differ in (|V|, |E|); generator
// validation errors propagate.
ClosedCheck CheckClosed(const SignedGraphSum& sum, Parity parity);

// Rewrites a sum as a list of unit terms with coefficient +1 each: a
// coefficient c contributes |c| copies, and negative copies are replaced by
// a relabeling of relation sign -1 (odd: first non-loop edge reversed; even:
// first two edges swapped).
std::vector<DirectedOrderedGraph> ExpandToUnitTerms(const SignedGraphSum& sum,
                                                    Parity parity);

struct PairingEntry {
  int term_a = 0;
  int edge_i = 0;
  int term_b = 0;
  int edge_j = 0;
  // Isomorphism from terms[a]/e_i to terms[b]/e_j.
  GraphIso witness;
};

struct GammaPairing {
  Parity parity = Parity::kOdd;
  std::vector<DirectedOrderedGraph> terms;
  std::vector<PairingEntry> pairs;
};

enum class ZeroTermPolicy {
  // Contractions landing in a zero class are left out of the pairing.
  kSkip,
  // Each such contraction is paired with itself, witnessed by an
  // automorphism of relation sign -1 (an involution when one exists).
  kSelfPair,
};

// Matches every nonzero contraction term of a closed sum with a cancelling
// partner. Within each target class the lexicographically first perfect
// matching is chosen. Throws kNotClosed; kPairingNotFound indicates an
// internal inconsistency.
GammaPairing ComputeGammaPairing(const SignedGraphSum& sum, Parity parity,
                                 ZeroTermPolicy zero_terms = ZeroTermPolicy::kSkip);

// Recomputes both contractions, checks that the witness is an isomorphism
// between them and that the sign condition evaluates to -1.
bool PairSignConditionHolds(const std::vector<DirectedOrderedGraph>& terms,
                            const PairingEntry& entry, Parity parity);

}  // namespace gcx

#endif  // GCX_GRAPH_COMPLEX_HPP_
