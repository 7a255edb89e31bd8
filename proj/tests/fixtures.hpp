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

#ifndef GCX_TESTS_FIXTURES_HPP_
#define GCX_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gcx/graph.hpp"
#include "gcx/signed_perm.hpp"

namespace fixtures {

using gcx::DirectedOrderedGraph;

inline DirectedOrderedGraph Theta() {
  return DirectedOrderedGraph(2, {{0, 1}, {0, 1}, {0, 1}});
}

inline DirectedOrderedGraph K4() {
  return DirectedOrderedGraph(4,
                              {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// Triangles 1-2-3 and 4-5-6 joined by rungs 1-4, 2-5, 3-6.
inline DirectedOrderedGraph Prism() {
  return DirectedOrderedGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5},
                                  {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline DirectedOrderedGraph SingleLoop() {
  return DirectedOrderedGraph(1, {{0, 0}});
}

// A random relabeling of g: shuffled vertices and edges, random directions.
inline DirectedOrderedGraph RandomRelabel(const DirectedOrderedGraph& g,
                                          std::mt19937_64& rng,
                                          gcx::GraphIso* iso = nullptr) {
  std::vector<int> vmap(g.vertex_count());
  std::iota(vmap.begin(), vmap.end(), 0);
  std::shuffle(vmap.begin(), vmap.end(), rng);
  std::vector<int> emap(g.edge_count());
  std::iota(emap.begin(), emap.end(), 0);
  std::shuffle(emap.begin(), emap.end(), rng);
  std::vector<bool> rev(g.edge_count());
  std::bernoulli_distribution coin(0.5);
  for (int e = 0; e < g.edge_count(); ++e) rev[e] = coin(rng);
  if (iso) *iso = {vmap, emap, rev};
  return gcx::Relabel(g, vmap, emap, rev);
}

inline gcx::SignedPermutation RandomSignedPerm(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<bool> flips(n);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < n; ++i) flips[i] = coin(rng);
  return gcx::SignedPermutation(perm, flips);
}

}  // namespace fixtures

#endif  // GCX_TESTS_FIXTURES_HPP_
