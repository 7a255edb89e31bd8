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

#ifndef GCX_GRAPH_HPP_
#define GCX_GRAPH_HPP_

#include <compare>
#include <span>
#include <vector>

#include "gcx/error.hpp"
#include "gcx/signed_perm.hpp"

namespace gcx {

// Vertex and edge indices are 0-based in memory. The label of a vertex or
// edge (its position in the ordering) is index + 1; all sign formulas below
// use labels. JSON files use labels.

struct Edge {
  int tail = 0;
  int head = 0;

  bool IsLoop() const { return tail == head; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A directed multigraph with totally ordered vertices and edges. Self-loops
// and parallel edges are allowed.
class DirectedOrderedGraph {
 public:
  DirectedOrderedGraph() = default;
  // Throws kLabelOutOfRange if an endpoint is not in 0..vertex_count-1.
  DirectedOrderedGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  // Number of edge ends at each vertex; a self-loop counts twice.
  std::vector<int> Valences() const;
  bool IsConnected() const;
  bool HasLoop() const;
  // True when two edges share the same unordered endpoint pair.
  bool HasRepeatedEdge() const;
  bool IsTrivalent() const;

  friend bool operator==(const DirectedOrderedGraph&,
                         const DirectedOrderedGraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Checks the generator conditions: non-empty, connected, every vertex at
// least trivalent. Returns the graph unchanged or throws kEmptyGraph,
// kNotConnected, kValenceTooLow.
const DirectedOrderedGraph& ValidateGenerator(const DirectedOrderedGraph& g);

// Gamma/e: the endpoints of edge `edge` merge into vertex 0, the remaining
// vertices keep their relative order, edge `edge` is dropped and the rest
// keep order and direction. Throws kSelfLoopContraction for a loop.
DirectedOrderedGraph ContractEdge(const DirectedOrderedGraph& g, int edge);

// Gamma/V': collapses the subgraph spanned by `vertices` (sorted, distinct)
// to vertex 0 and deletes its internal edges.
DirectedOrderedGraph ContractVertexSet(const DirectedOrderedGraph& g,
                                       std::span<const int> vertices);

// Gamma_{V'}: the subgraph spanned by `vertices` (sorted, distinct), orders
// inherited.
DirectedOrderedGraph SpannedSubgraph(const DirectedOrderedGraph& g,
                                     std::span<const int> vertices);

// Same graph with vertices relabeled by `vertex_map` (old -> new), edges
// placed at `edge_map` (old -> new) and the listed edges reversed.
DirectedOrderedGraph Relabel(const DirectedOrderedGraph& g,
                             const std::vector<int>& vertex_map,
                             const std::vector<int>& edge_map,
                             const std::vector<bool>& reversed);

// An isomorphism of undirected, unordered multigraphs. `reversed[e]` records
// whether the source edge e is sent to its image against its direction; for
// a self-loop this is an independent choice.
struct GraphIso {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  std::vector<bool> reversed;

  friend bool operator==(const GraphIso&, const GraphIso&) = default;
  friend auto operator<=>(const GraphIso&, const GraphIso&) = default;
};

struct IsoSigns {
  int vertex = 1;
  int edge = 1;
  int arrow = 1;
  int sgn_d = 1;

  friend bool operator==(const IsoSigns&, const IsoSigns&) = default;
};

enum class Parity { kOdd, kEven };

inline Parity ParityOf(int d) { return d % 2 ? Parity::kOdd : Parity::kEven; }

GraphIso IdentityIso(const DirectedOrderedGraph& g);
// (b o a): apply a first.
GraphIso Compose(const GraphIso& b, const GraphIso& a);
GraphIso Inverse(const GraphIso& a);

// Verifies that `a` is an isomorphism from g1 to g2 with consistent
// reversal bits.
bool IsIsomorphism(const DirectedOrderedGraph& g1,
                   const DirectedOrderedGraph& g2, const GraphIso& a);

// All isomorphisms g1 -> g2, sorted.
std::vector<GraphIso> FindIsomorphisms(const DirectedOrderedGraph& g1,
                                       const DirectedOrderedGraph& g2);

// sgn_d is read as a parity exponent:
//   sgn_d = (-1)^((d-1) e_E + d (e_V + e_arrow)).
IsoSigns Signs(const GraphIso& a, int d);

// Sign by which the isomorphism relates source and target in the quotient:
// sgn(vertex) * sgn(arrow) for odd, sgn(edge) for even.
int RelationSign(const GraphIso& a, Parity parity);

std::vector<GraphIso> AutGroup(const DirectedOrderedGraph& g);

// Sum of sgn_d over the automorphism group.
long long SignedAutCount(const DirectedOrderedGraph& g, int d);

// Edge part of an automorphism as a signed permutation of the edges.
// Throws kNotAnAutomorphism.
SignedPermutation PsiGamma(const DirectedOrderedGraph& g, const GraphIso& a);

// Checks f(gamma(a) x) == phi(psi(a)) f(x) on the symbolic configuration
// x_v = v, where f lists (tail, head) per edge. gamma(a) is realised as the
// left action on vertex-indexed tuples (the point at v moves to a(v)), the
// same indexing convention ActOnTuple uses for edges.
// Throws kNotAnAutomorphism.
bool EdgeTupleActionCheck(const DirectedOrderedGraph& g, const GraphIso& a);

}  // namespace gcx

#endif  // GCX_GRAPH_HPP_
