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

#include "gcx/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace gcx {
namespace {

using CountMatrix = std::vector<std::vector<int>>;

// Symmetric matrix of edge multiplicities; a loop adds 1 on the diagonal.
CountMatrix Multiplicities(const DirectedOrderedGraph& g) {
  CountMatrix c(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) {
    ++c[e.tail][e.head];
    if (!e.IsLoop()) ++c[e.head][e.tail];
  }
  return c;
}

std::pair<int, int> UnorderedKey(int a, int b) {
  return a < b ? std::pair(a, b) : std::pair(b, a);
}

std::vector<bool> Membership(int n, std::span<const int> vertices) {
  std::vector<bool> in(n, false);
  for (int v : vertices) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::kLabelOutOfRange,
                  "vertex " + std::to_string(v + 1) + " not in graph");
    }
    in[v] = true;
  }
  return in;
}

// Completes a vertex bijection to every compatible edge bijection.
class EdgeCompleter {
 public:
  EdgeCompleter(const DirectedOrderedGraph& g1, const DirectedOrderedGraph& g2,
                const std::vector<int>& vertex_map)
      : g1_(g1), g2_(g2), vertex_map_(vertex_map) {
    std::map<std::pair<int, int>, std::vector<int>> source;
    std::map<std::pair<int, int>, std::vector<int>> target;
    for (int e = 0; e < g1.edge_count(); ++e) {
      source[UnorderedKey(g1.edge(e).tail, g1.edge(e).head)].push_back(e);
    }
    for (int e = 0; e < g2.edge_count(); ++e) {
      target[UnorderedKey(g2.edge(e).tail, g2.edge(e).head)].push_back(e);
    }
    for (auto& [key, edges] : source) {
      Class cls;
      cls.source = edges;
      cls.target = target[UnorderedKey(vertex_map[key.first],
                                       vertex_map[key.second])];
      cls.loop = key.first == key.second;
      classes_.push_back(std::move(cls));
    }
  }

  void Run(std::vector<GraphIso>& out) {
    current_.vertex_map = vertex_map_;
    current_.edge_map.assign(g1_.edge_count(), -1);
    current_.reversed.assign(g1_.edge_count(), false);
    Recurse(0, out);
  }

 private:
  struct Class {
    std::vector<int> source;
    std::vector<int> target;
    bool loop = false;
  };

  void Recurse(std::size_t index, std::vector<GraphIso>& out) {
    if (index == classes_.size()) {
      out.push_back(current_);
      return;
    }
    const Class& cls = classes_[index];
    const std::size_t k = cls.source.size();
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    do {
      for (std::size_t i = 0; i < k; ++i) {
        const int from = cls.source[i];
        const int to = cls.target[order[i]];
        current_.edge_map[from] = to;
        if (!cls.loop) {
          current_.reversed[from] =
              vertex_map_[g1_.edge(from).tail] != g2_.edge(to).tail;
        }
      }
      if (cls.loop) {
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
          for (std::size_t i = 0; i < k; ++i) {
            current_.reversed[cls.source[i]] = (mask >> (k - 1 - i)) & 1u;
          }
          Recurse(index + 1, out);
        }
      } else {
        Recurse(index + 1, out);
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }

  const DirectedOrderedGraph& g1_;
  const DirectedOrderedGraph& g2_;
  const std::vector<int>& vertex_map_;
  std::vector<Class> classes_;
  GraphIso current_;
};

}  // namespace

DirectedOrderedGraph::DirectedOrderedGraph(int vertex_count,
                                           std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  }
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 ||
        e.head >= vertex_count_) {
      throw Error(ErrorCode::kLabelOutOfRange,
                  "edge endpoint outside 1.." + std::to_string(vertex_count_));
    }
  }
}

std::vector<int> DirectedOrderedGraph::Valences() const {
  std::vector<int> valence(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++valence[e.tail];
    ++valence[e.head];
  }
  return valence;
}

bool DirectedOrderedGraph::IsConnected() const {
  if (vertex_count_ == 0) return false;
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = vertex_count_;
  for (const Edge& e : edges_) {
    const int a = find(e.tail);
    const int b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool DirectedOrderedGraph::HasLoop() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.IsLoop(); });
}

bool DirectedOrderedGraph::HasRepeatedEdge() const {
  std::vector<std::pair<int, int>> keys;
  keys.reserve(edges_.size());
  for (const Edge& e : edges_) keys.push_back(UnorderedKey(e.tail, e.head));
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

bool DirectedOrderedGraph::IsTrivalent() const {
  const auto valence = Valences();
  return std::all_of(valence.begin(), valence.end(),
                     [](int v) { return v == 3; });
}

const DirectedOrderedGraph& ValidateGenerator(const DirectedOrderedGraph& g) {
  if (g.vertex_count() == 0 || g.edge_count() == 0) {
    throw Error(ErrorCode::kEmptyGraph, "graph has no edges");
  }
  if (!g.IsConnected()) {
    throw Error(ErrorCode::kNotConnected, "underlying graph is disconnected");
  }
  const auto valence = g.Valences();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (valence[v] < 3) {
      throw Error(ErrorCode::kValenceTooLow,
                  "vertex " + std::to_string(v + 1) + " has valence " +
                      std::to_string(valence[v]));
    }
  }
  return g;
}

DirectedOrderedGraph ContractEdge(const DirectedOrderedGraph& g, int edge) {
  if (edge < 0 || edge >= g.edge_count()) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "edge " + std::to_string(edge + 1) + " not in graph");
  }
  const Edge& contracted = g.edge(edge);
  if (contracted.IsLoop()) {
    throw Error(ErrorCode::kSelfLoopContraction,
                "edge " + std::to_string(edge + 1) + " is a self-loop");
  }
  std::vector<int> relabel(g.vertex_count());
  int next = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    relabel[v] = (v == contracted.tail || v == contracted.head) ? 0 : next++;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e == edge) continue;
    edges.push_back({relabel[g.edge(e).tail], relabel[g.edge(e).head]});
  }
  return DirectedOrderedGraph(g.vertex_count() - 1, std::move(edges));
}

DirectedOrderedGraph ContractVertexSet(const DirectedOrderedGraph& g,
                                       std::span<const int> vertices) {
  const auto in = Membership(g.vertex_count(), vertices);
  std::vector<int> relabel(g.vertex_count());
  int next = 1;
  for (int v = 0; v < g.vertex_count(); ++v) relabel[v] = in[v] ? 0 : next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (in[e.tail] && in[e.head]) continue;
    edges.push_back({relabel[e.tail], relabel[e.head]});
  }
  return DirectedOrderedGraph(next, std::move(edges));
}

DirectedOrderedGraph SpannedSubgraph(const DirectedOrderedGraph& g,
                                     std::span<const int> vertices) {
  const auto in = Membership(g.vertex_count(), vertices);
  std::vector<int> relabel(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in[v]) relabel[v] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (in[e.tail] && in[e.head]) {
      edges.push_back({relabel[e.tail], relabel[e.head]});
    }
  }
  return DirectedOrderedGraph(next, std::move(edges));
}

DirectedOrderedGraph Relabel(const DirectedOrderedGraph& g,
                             const std::vector<int>& vertex_map,
                             const std::vector<int>& edge_map,
                             const std::vector<bool>& reversed) {
  std::vector<Edge> edges(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const int tail = vertex_map[g.edge(e).tail];
    const int head = vertex_map[g.edge(e).head];
    edges[edge_map[e]] = reversed[e] ? Edge{head, tail} : Edge{tail, head};
  }
  return DirectedOrderedGraph(g.vertex_count(), std::move(edges));
}

GraphIso IdentityIso(const DirectedOrderedGraph& g) {
  GraphIso id;
  id.vertex_map.resize(g.vertex_count());
  std::iota(id.vertex_map.begin(), id.vertex_map.end(), 0);
  id.edge_map.resize(g.edge_count());
  std::iota(id.edge_map.begin(), id.edge_map.end(), 0);
  id.reversed.assign(g.edge_count(), false);
  return id;
}

GraphIso Compose(const GraphIso& b, const GraphIso& a) {
  GraphIso out;
  out.vertex_map.resize(a.vertex_map.size());
  for (std::size_t v = 0; v < a.vertex_map.size(); ++v) {
    out.vertex_map[v] = b.vertex_map[a.vertex_map[v]];
  }
  out.edge_map.resize(a.edge_map.size());
  out.reversed.resize(a.edge_map.size());
  for (std::size_t e = 0; e < a.edge_map.size(); ++e) {
    out.edge_map[e] = b.edge_map[a.edge_map[e]];
    out.reversed[e] = a.reversed[e] != b.reversed[a.edge_map[e]];
  }
  return out;
}

GraphIso Inverse(const GraphIso& a) {
  GraphIso out;
  out.vertex_map.resize(a.vertex_map.size());
  for (std::size_t v = 0; v < a.vertex_map.size(); ++v) {
    out.vertex_map[a.vertex_map[v]] = static_cast<int>(v);
  }
  out.edge_map.resize(a.edge_map.size());
  out.reversed.resize(a.edge_map.size());
  for (std::size_t e = 0; e < a.edge_map.size(); ++e) {
    out.edge_map[a.edge_map[e]] = static_cast<int>(e);
    out.reversed[a.edge_map[e]] = a.reversed[e];
  }
  return out;
}

bool IsIsomorphism(const DirectedOrderedGraph& g1,
                   const DirectedOrderedGraph& g2, const GraphIso& a) {
  const auto n = static_cast<std::size_t>(g1.vertex_count());
  const auto m = static_cast<std::size_t>(g1.edge_count());
  if (g2.vertex_count() != g1.vertex_count() ||
      g2.edge_count() != g1.edge_count() || a.vertex_map.size() != n ||
      a.edge_map.size() != m || a.reversed.size() != m) {
    return false;
  }
  auto is_bijection = [](const std::vector<int>& map) {
    std::vector<bool> hit(map.size(), false);
    for (int x : map) {
      if (x < 0 || x >= static_cast<int>(map.size()) || hit[x]) return false;
      hit[x] = true;
    }
    return true;
  };
  if (!is_bijection(a.vertex_map) || !is_bijection(a.edge_map)) return false;
  for (std::size_t e = 0; e < m; ++e) {
    const Edge& source = g1.edge(static_cast<int>(e));
    const Edge& target = g2.edge(a.edge_map[e]);
    const int tail = a.vertex_map[source.tail];
    const int head = a.vertex_map[source.head];
    if (source.IsLoop()) {
      if (!target.IsLoop() || target.tail != tail) return false;
    } else if (a.reversed[e]) {
      if (target.tail != head || target.head != tail) return false;
    } else if (target.tail != tail || target.head != head) {
      return false;
    }
  }
  return true;
}

std::vector<GraphIso> FindIsomorphisms(const DirectedOrderedGraph& g1,
                                       const DirectedOrderedGraph& g2) {
  std::vector<GraphIso> out;
  const int n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return out;
  const CountMatrix c1 = Multiplicities(g1);
  const CountMatrix c2 = Multiplicities(g2);
  const auto val1 = g1.Valences();
  const auto val2 = g2.Valences();

  std::vector<int> vertex_map(n, -1);
  std::vector<bool> used(n, false);
  auto assign = [&](auto&& self, int i) -> void {
    if (i == n) {
      EdgeCompleter(g1, g2, vertex_map).Run(out);
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j] || val1[i] != val2[j] || c1[i][i] != c2[j][j]) continue;
      bool consistent = true;
      for (int k = 0; k < i && consistent; ++k) {
        consistent = c1[i][k] == c2[j][vertex_map[k]];
      }
      if (!consistent) continue;
      used[j] = true;
      vertex_map[i] = j;
      self(self, i + 1);
      used[j] = false;
    }
    vertex_map[i] = -1;
  };
  assign(assign, 0);
  std::sort(out.begin(), out.end());
  return out;
}

IsoSigns Signs(const GraphIso& a, int d) {
  IsoSigns s;
  s.vertex = PermutationSign(a.vertex_map);
  s.edge = PermutationSign(a.edge_map);
  const auto reversals = std::count(a.reversed.begin(), a.reversed.end(), true);
  s.arrow = reversals % 2 ? -1 : 1;
  const int edge_bit = s.edge < 0;
  const int vertex_bit = s.vertex < 0;
  const int arrow_bit = s.arrow < 0;
  const long long exponent = static_cast<long long>(d - 1) * edge_bit +
                             static_cast<long long>(d) * (vertex_bit + arrow_bit);
  s.sgn_d = exponent % 2 ? -1 : 1;
  return s;
}

int RelationSign(const GraphIso& a, Parity parity) {
  if (parity == Parity::kEven) return PermutationSign(a.edge_map);
  const auto reversals = std::count(a.reversed.begin(), a.reversed.end(), true);
  return PermutationSign(a.vertex_map) * (reversals % 2 ? -1 : 1);
}

std::vector<GraphIso> AutGroup(const DirectedOrderedGraph& g) {
  return FindIsomorphisms(g, g);
}

long long SignedAutCount(const DirectedOrderedGraph& g, int d) {
  long long total = 0;
  for (const GraphIso& a : AutGroup(g)) total += Signs(a, d).sgn_d;
  return total;
}

SignedPermutation PsiGamma(const DirectedOrderedGraph& g, const GraphIso& a) {
  if (!IsIsomorphism(g, g, a)) {
    throw Error(ErrorCode::kNotAnAutomorphism,
                "map is not an automorphism of the graph");
  }
  return SignedPermutation(a.edge_map, a.reversed);
}

bool EdgeTupleActionCheck(const DirectedOrderedGraph& g, const GraphIso& a) {
  const SignedPermutation psi = PsiGamma(g, a);
  // Symbolic configuration x_v = v, moved by the vertex action.
  std::vector<int> moved(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) moved[a.vertex_map[v]] = v;

  std::vector<std::pair<int, int>> before(g.edge_count());
  std::vector<std::pair<int, int>> lhs(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    before[e] = {edge.tail, edge.head};
    lhs[e] = {moved[edge.tail], moved[edge.head]};
  }
  return lhs == ActOnTuple(psi, before);
}

}  // namespace gcx
