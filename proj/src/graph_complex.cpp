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

#include "gcx/graph_complex.hpp"

#include <omp.h>

#include <algorithm>
#include <climits>
#include <exception>
#include <map>
#include <numeric>
#include <tuple>
#include <utility>

namespace gcx {
namespace {

using Code = std::vector<int>;

struct Multigraph {
  int n = 0;
  std::vector<std::vector<int>> count;
  std::vector<int> valence;
};

Multigraph ToMultigraph(const DirectedOrderedGraph& g) {
  Multigraph m;
  m.n = g.vertex_count();
  m.count.assign(m.n, std::vector<int>(m.n, 0));
  for (const Edge& e : g.edges()) {
    ++m.count[e.tail][e.head];
    if (!e.IsLoop()) ++m.count[e.head][e.tail];
  }
  m.valence = g.Valences();
  return m;
}

void AppendColumn(const Multigraph& m, const std::vector<int>& order, int pos,
                  Code& code) {
  const int u = order[pos];
  for (int p = 0; p < pos; ++p) code.push_back(m.count[order[p]][u]);
  code.push_back(m.count[u][u]);
}

Code CodeUnderOrder(const Multigraph& m, const std::vector<int>& order) {
  Code code;
  for (int pos = 0; pos < m.n; ++pos) AppendColumn(m, order, pos, code);
  return code;
}

// Branch and bound over vertex orders with ascending valence, minimising the
// column-major upper-triangle multiplicity code.
class OrderSearch {
 public:
  explicit OrderSearch(const Multigraph& m) : m_(m), used_(m.n, false) {}

  void Run() {
    found_ = false;
    Recurse();
  }
  const std::vector<int>& best_order() const { return best_order_; }
  const Code& best_code() const { return best_code_; }

 private:
  void Recurse() {
    const int pos = static_cast<int>(order_.size());
    if (pos == m_.n) {
      if (!found_ || code_ < best_code_) {
        best_code_ = code_;
        best_order_ = order_;
        found_ = true;
      }
      return;
    }
    int min_valence = INT_MAX;
    for (int u = 0; u < m_.n; ++u) {
      if (!used_[u]) min_valence = std::min(min_valence, m_.valence[u]);
    }
    for (int u = 0; u < m_.n; ++u) {
      if (used_[u] || m_.valence[u] != min_valence) continue;
      used_[u] = true;
      order_.push_back(u);
      const std::size_t mark = code_.size();
      AppendColumn(m_, order_, pos, code_);
      const bool worse =
          found_ && std::lexicographical_compare(
                        best_code_.begin(), best_code_.begin() + code_.size(),
                        code_.begin(), code_.end());
      if (!worse) Recurse();
      code_.resize(mark);
      order_.pop_back();
      used_[u] = false;
    }
  }

  const Multigraph& m_;
  std::vector<bool> used_;
  std::vector<int> order_;
  Code code_;
  bool found_ = false;
  std::vector<int> best_order_;
  Code best_code_;
};

std::string KeyFromCode(int n, const Code& code) {
  std::string key;
  key.reserve(code.size() + 1);
  key.push_back(static_cast<char>(n));
  for (int c : code) key.push_back(static_cast<char>(c));
  return key;
}

DirectedOrderedGraph RepresentativeFromOrder(const Multigraph& m,
                                             const std::vector<int>& order) {
  std::vector<Edge> edges;
  for (int a = 0; a < m.n; ++a) {
    for (int b = a; b < m.n; ++b) {
      for (int k = 0; k < m.count[order[a]][order[b]]; ++k) {
        edges.push_back({a, b});
      }
    }
  }
  return DirectedOrderedGraph(m.n, std::move(edges));
}

// First edge index of each unordered endpoint class of a representative.
std::map<std::pair<int, int>, int> ClassStarts(const DirectedOrderedGraph& rep) {
  std::map<std::pair<int, int>, int> starts;
  for (int e = rep.edge_count() - 1; e >= 0; --e) {
    starts[{rep.edge(e).tail, rep.edge(e).head}] = e;
  }
  return starts;
}

GraphIso IsoToRepresentative(const DirectedOrderedGraph& g,
                             const std::vector<int>& order,
                             const DirectedOrderedGraph& rep) {
  GraphIso iso;
  iso.vertex_map.resize(g.vertex_count());
  for (int p = 0; p < g.vertex_count(); ++p) iso.vertex_map[order[p]] = p;
  auto next = ClassStarts(rep);
  iso.edge_map.resize(g.edge_count());
  iso.reversed.assign(g.edge_count(), false);
  for (int e = 0; e < g.edge_count(); ++e) {
    const int tail = iso.vertex_map[g.edge(e).tail];
    const int head = iso.vertex_map[g.edge(e).head];
    iso.edge_map[e] = next[{std::min(tail, head), std::max(tail, head)}]++;
    iso.reversed[e] = tail > head;
  }
  return iso;
}

std::vector<std::vector<int>> VertexAutomorphisms(const Multigraph& m) {
  std::vector<std::vector<int>> out;
  std::vector<int> map(m.n, -1);
  std::vector<bool> used(m.n, false);
  auto assign = [&](auto&& self, int i) -> void {
    if (i == m.n) {
      out.push_back(map);
      return;
    }
    for (int j = 0; j < m.n; ++j) {
      if (used[j] || m.valence[i] != m.valence[j] ||
          m.count[i][i] != m.count[j][j]) {
        continue;
      }
      bool consistent = true;
      for (int k = 0; k < i && consistent; ++k) {
        consistent = m.count[i][k] == m.count[j][map[k]];
      }
      if (!consistent) continue;
      used[j] = true;
      map[i] = j;
      self(self, i + 1);
      used[j] = false;
    }
  };
  assign(assign, 0);
  return out;
}

// Lifts a vertex automorphism of a representative by sending the k-th edge
// of each endpoint class to the k-th edge of the image class, loops kept.
GraphIso LiftToRepresentative(const DirectedOrderedGraph& rep,
                              const std::map<std::pair<int, int>, int>& starts,
                              const std::vector<int>& vertex_map) {
  GraphIso lift;
  lift.vertex_map = vertex_map;
  lift.edge_map.resize(rep.edge_count());
  lift.reversed.assign(rep.edge_count(), false);
  for (int e = 0; e < rep.edge_count(); ++e) {
    const Edge& edge = rep.edge(e);
    const int offset = e - starts.at({edge.tail, edge.head});
    const int a = vertex_map[edge.tail];
    const int b = vertex_map[edge.head];
    lift.edge_map[e] = starts.at({std::min(a, b), std::max(a, b)}) + offset;
    lift.reversed[e] = a > b;
  }
  return lift;
}

// The automorphism group is generated by vertex-fixing moves (swapping
// parallel edges, reversing a loop) and one lift per vertex automorphism,
// so the relation sign is trivial iff it is trivial on those.
bool ComputeZeroFlag(const DirectedOrderedGraph& rep, const Multigraph& m,
                     Parity parity) {
  for (int a = 0; a < m.n; ++a) {
    for (int b = a; b < m.n; ++b) {
      const int k = m.count[a][b];
      if (parity == Parity::kOdd && a == b && k > 0) return true;
      if (parity == Parity::kEven && k >= 2) return true;
    }
  }
  const auto starts = ClassStarts(rep);
  for (const auto& vertex_map : VertexAutomorphisms(m)) {
    if (RelationSign(LiftToRepresentative(rep, starts, vertex_map), parity) <
        0) {
      return true;
    }
  }
  return false;
}

bool ZeroFlag(const DirectedOrderedGraph& rep, Parity parity) {
  return ComputeZeroFlag(rep, ToMultigraph(rep), parity);
}

// Orderly generation of canonical multiplicity matrices. Slots of the upper
// triangle are filled row by row; a vertex's valence is final once its row
// is complete, which is where the valence bounds prune.
class OrderlyEnumerator {
 public:
  OrderlyEnumerator(int n, int e, bool allow_loops)
      : n_(n), e_(e), allow_loops_(allow_loops) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) slots_.emplace_back(i, j);
    }
  }

  struct State {
    std::vector<std::vector<int>> count;
    std::vector<int> valence;
    int remaining = 0;
  };

  State Initial() const {
    State s;
    s.count.assign(n_, std::vector<int>(n_, 0));
    s.valence.assign(n_, 0);
    s.remaining = e_;
    return s;
  }

  // Completions of the first row, each a starting point for Complete().
  std::vector<State> Seeds() const {
    std::vector<State> seeds;
    State s = Initial();
    Fill(s, 0, static_cast<std::size_t>(n_),
         [&](const State& done) { seeds.push_back(done); });
    return seeds;
  }

  void Complete(State s, std::size_t first_slot,
                std::vector<DirectedOrderedGraph>& out) const {
    Fill(s, first_slot, slots_.size(), [&](const State& done) {
      if (done.remaining != 0) return;
      Accept(done, out);
    });
  }

  std::size_t row_slots() const { return static_cast<std::size_t>(n_); }

 private:
  template <typename Sink>
  void Fill(State& s, std::size_t slot, std::size_t stop, Sink&& sink) const {
    if (slot == stop) {
      sink(s);
      return;
    }
    const auto [i, j] = slots_[slot];
    const int max = (i == j && !allow_loops_) ? 0 : s.remaining;
    for (int c = 0; c <= max; ++c) {
      s.count[i][j] = c;
      s.count[j][i] = c;
      const int valence_gain_i = i == j ? 2 * c : c;
      s.valence[i] += valence_gain_i;
      if (i != j) s.valence[j] += c;
      s.remaining -= c;
      bool ok = true;
      if (j == n_ - 1) {
        ok = s.valence[i] >= 3 && (i == 0 || s.valence[i] >= s.valence[i - 1]);
      }
      if (ok) Fill(s, slot + 1, stop, sink);
      s.remaining += c;
      s.valence[i] -= valence_gain_i;
      if (i != j) s.valence[j] -= c;
    }
    s.count[i][j] = 0;
    s.count[j][i] = 0;
  }

  void Accept(const State& s, std::vector<DirectedOrderedGraph>& out) const {
    Multigraph m;
    m.n = n_;
    m.count = s.count;
    m.valence = s.valence;
    std::vector<int> identity(n_);
    std::iota(identity.begin(), identity.end(), 0);
    DirectedOrderedGraph g = RepresentativeFromOrder(m, identity);
    if (!g.IsConnected()) return;
    OrderSearch search(m);
    search.Run();
    if (search.best_code() != CodeUnderOrder(m, identity)) return;
    out.push_back(std::move(g));
  }

  int n_;
  int e_;
  bool allow_loops_;
  std::vector<std::pair<int, int>> slots_;
};

std::vector<DirectedOrderedGraph> EnumerateRepresentatives(int vertices,
                                                           int edges,
                                                           bool allow_loops,
                                                           Execution execution) {
  std::vector<DirectedOrderedGraph> reps;
  if (vertices < 1 || edges < 0) return reps;
  OrderlyEnumerator enumerator(vertices, edges, allow_loops);
  if (execution == Execution::kSerial) {
    enumerator.Complete(enumerator.Initial(), 0, reps);
    return reps;
  }
  const auto seeds = enumerator.Seeds();
  std::vector<std::vector<DirectedOrderedGraph>> per_seed(seeds.size());
  const auto count = static_cast<long long>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(WorkerCount())
  for (long long s = 0; s < count; ++s) {
    enumerator.Complete(seeds[s], enumerator.row_slots(), per_seed[s]);
  }
  for (auto& part : per_seed) {
    for (auto& g : part) reps.push_back(std::move(g));
  }
  return reps;
}

}  // namespace

Canonicalization Canonicalize(const DirectedOrderedGraph& g, Parity parity) {
  const Multigraph m = ToMultigraph(g);
  OrderSearch search(m);
  search.Run();
  Canonicalization result;
  result.canonical.parity = parity;
  result.canonical.representative =
      RepresentativeFromOrder(m, search.best_order());
  result.to_representative =
      IsoToRepresentative(g, search.best_order(),
                          result.canonical.representative);
  result.canonical.zero = ZeroFlag(result.canonical.representative, parity);
  result.sign = result.canonical.zero
                    ? 0
                    : RelationSign(result.to_representative, parity);
  return result;
}

std::string CanonicalKey(const DirectedOrderedGraph& g) {
  const Multigraph m = ToMultigraph(g);
  OrderSearch search(m);
  search.Run();
  return KeyFromCode(m.n, search.best_code());
}

std::vector<DirectedOrderedGraph> EnumerateGenerators(int vertices, int edges,
                                                      bool allow_loops,
                                                      Execution execution) {
  auto reps = EnumerateRepresentatives(vertices, edges, allow_loops, execution);
  std::vector<std::pair<std::string, DirectedOrderedGraph>> keyed;
  keyed.reserve(reps.size());
  for (auto& g : reps) {
    const Multigraph m = ToMultigraph(g);
    std::vector<int> identity(m.n);
    std::iota(identity.begin(), identity.end(), 0);
    keyed.emplace_back(KeyFromCode(m.n, CodeUnderOrder(m, identity)),
                       std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<DirectedOrderedGraph> out;
  out.reserve(keyed.size());
  for (auto& entry : keyed) out.push_back(std::move(entry.second));
  return out;
}

std::vector<CanonicalClass> EnumerateBasis(int vertices, int edges,
                                           Parity parity, bool allow_loops,
                                           Execution execution) {
  std::vector<CanonicalClass> basis;
  for (auto& g : EnumerateGenerators(vertices, edges, allow_loops, execution)) {
    if (ZeroFlag(g, parity)) continue;
    basis.push_back({std::move(g), parity, false});
  }
  return basis;
}

GraphBasis::GraphBasis(int vertices, int edges, Parity parity,
                       std::vector<CanonicalClass> classes)
    : vertices_(vertices),
      edges_(edges),
      parity_(parity),
      classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    index_.emplace(CanonicalKey(classes_[i].representative), i);
  }
}

GraphBasis GraphBasis::Enumerate(int vertices, int edges, Parity parity,
                                 bool allow_loops, Execution execution) {
  return GraphBasis(
      vertices, edges, parity,
      EnumerateBasis(vertices, edges, parity, allow_loops, execution));
}

std::optional<std::size_t> GraphBasis::Find(const std::string& key) const {
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int ContractionCoefficient(const DirectedOrderedGraph& g, int edge,
                           Parity parity) {
  if (parity == Parity::kOdd) {
    const Edge& e = g.edge(edge);
    const int sign = (e.head - e.tail) % 2 ? -1 : 1;
    // A backward edge carries an extra -1 so that reversing it negates the
    // term, as it negates the graph.
    return e.head < e.tail ? -sign : sign;
  }
  return (edge + 1) % 2 ? -1 : 1;
}

namespace {

struct ColumnEntry {
  std::size_t row;
  int value;
};

std::vector<ColumnEntry> BoundaryColumn(const DirectedOrderedGraph& source,
                                        const GraphBasis& target) {
  std::vector<ColumnEntry> column;
  for (int e = 0; e < source.edge_count(); ++e) {
    if (source.edge(e).IsLoop()) continue;
    const auto image = Canonicalize(ContractEdge(source, e), target.parity());
    if (image.sign == 0) continue;
    const auto row =
        target.Find(CanonicalKey(image.canonical.representative));
    if (!row) {
      throw Error(ErrorCode::kBasisMismatch,
                  "contraction of edge " + std::to_string(e + 1) +
                      " is missing from the target basis");
    }
    column.push_back(
        {*row, image.sign * ContractionCoefficient(source, e, target.parity())});
  }
  return column;
}

}  // namespace

SparseIntMatrix BoundaryMatrix(const GraphBasis& source,
                               const GraphBasis& target, Execution execution) {
  if (source.vertices() != target.vertices() + 1 ||
      source.edges() != target.edges() + 1 ||
      source.parity() != target.parity()) {
    throw Error(ErrorCode::kBasisMismatch,
                "target basis must sit at (|V|-1, |E|-1) with equal parity");
  }
  SparseIntMatrix matrix(target.size(), source.size());
  if (execution == Execution::kSerial) {
    for (std::size_t j = 0; j < source.size(); ++j) {
      for (const auto& entry : BoundaryColumn(source[j].representative, target)) {
        matrix.Add(entry.row, j, entry.value);
      }
    }
    return matrix;
  }
  std::vector<std::vector<ColumnEntry>> columns(source.size());
  std::vector<std::exception_ptr> failures(source.size());
  const auto count = static_cast<long long>(source.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(WorkerCount())
  for (long long j = 0; j < count; ++j) {
    try {
      columns[j] = BoundaryColumn(source[j].representative, target);
    } catch (...) {
      failures[j] = std::current_exception();
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& entry : columns[j]) matrix.Add(entry.row, j, entry.value);
  }
  return matrix;
}

HomologyTable ComputeHomology(const std::vector<GraphBasis>& chain, Ring ring,
                              Execution execution) {
  HomologyTable table;
  table.ring = ring;
  if (chain.empty()) return table;
  table.parity = chain.front().parity();
  table.loop_order = chain.front().edges() - chain.front().vertices() + 1;

  // rank_out[k]: rank of the boundary leaving chain[k].
  std::vector<std::size_t> rank_out(chain.size(), 0);
  std::vector<std::vector<Integer>> factors_out(chain.size());
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const SparseIntMatrix delta = BoundaryMatrix(chain[k], chain[k - 1], execution);
    if (ring == Ring::kIntegers) {
      SmithForm form = SmithNormalForm(delta, execution);
      rank_out[k] = form.rank;
      factors_out[k] = std::move(form.invariant_factors);
    } else {
      rank_out[k] = RationalRank(delta);
    }
  }
  for (std::size_t k = 0; k < chain.size(); ++k) {
    HomologyGroup group;
    group.vertices = chain[k].vertices();
    group.edges = chain[k].edges();
    group.chain_rank = chain[k].size();
    group.boundary_rank_out = rank_out[k];
    group.boundary_rank_in = k + 1 < chain.size() ? rank_out[k + 1] : 0;
    group.betti =
        group.chain_rank - group.boundary_rank_out - group.boundary_rank_in;
    if (ring == Ring::kIntegers && k + 1 < chain.size()) {
      for (const auto& d : factors_out[k + 1]) {
        if (d > 1) group.torsion.push_back(d);
      }
    }
    table.groups.push_back(std::move(group));
  }
  if (ring == Ring::kIntegers) {
    table.notes.push_back(
        "integer coefficients: zero-flagged classes are removed from each "
        "basis, which amounts to inverting 2; torsion reported for that "
        "complex only");
  }
  table.notes.push_back("self-loop edges contribute no boundary term");
  return table;
}

HomologyTable HomologyForLoopOrder(int loop_order, Parity parity, Ring ring,
                                   bool allow_loops, Execution execution) {
  std::vector<GraphBasis> chain;
  for (int v = 1; v <= 2 * (loop_order - 1); ++v) {
    chain.push_back(GraphBasis::Enumerate(v, v + loop_order - 1, parity,
                                          allow_loops, execution));
  }
  HomologyTable table = ComputeHomology(chain, ring, execution);
  table.parity = parity;
  table.loop_order = loop_order;
  table.allow_loops = allow_loops;
  return table;
}

ClosedCheck CheckClosed(const SignedGraphSum& sum, Parity parity) {
  ClosedCheck check;
  std::map<std::string, ResidualTerm> expansion;
  bool all_zero_input = true;
  for (std::size_t t = 0; t < sum.terms.size(); ++t) {
    const SumTerm& term = sum.terms[t];
    ValidateGenerator(term.graph);
    if (term.graph.vertex_count() != sum.terms.front().graph.vertex_count() ||
        term.graph.edge_count() != sum.terms.front().graph.edge_count()) {
      throw Error(ErrorCode::kMixedBidegree,
                  "term " + std::to_string(t + 1) + " has a different (|V|, |E|)");
    }
    if (term.coefficient != 0 && Canonicalize(term.graph, parity).sign != 0) {
      all_zero_input = false;
    }
    for (int e = 0; e < term.graph.edge_count(); ++e) {
      if (term.graph.edge(e).IsLoop()) {
        ++check.omitted_loop_terms;
        continue;
      }
      const auto image = Canonicalize(ContractEdge(term.graph, e), parity);
      if (image.sign == 0) continue;
      const Integer contribution =
          Integer(std::to_string(term.coefficient)) *
          (image.sign * ContractionCoefficient(term.graph, e, parity));
      auto [it, inserted] = expansion.try_emplace(
          CanonicalKey(image.canonical.representative),
          ResidualTerm{0, image.canonical.representative});
      it->second.coefficient += contribution;
    }
  }
  for (auto& [key, term] : expansion) {
    if (term.coefficient != 0) check.residual.push_back(std::move(term));
  }
  check.closed = check.residual.empty();
  if (all_zero_input) {
    check.warnings.push_back(
        "input is zero in the quotient; closed vacuously");
  }
  if (check.omitted_loop_terms > 0) {
    check.warnings.push_back(std::to_string(check.omitted_loop_terms) +
                             " self-loop edge(s) contribute no term");
  }
  return check;
}

namespace {

DirectedOrderedGraph Negated(const DirectedOrderedGraph& g, Parity parity) {
  GraphIso relabel = IdentityIso(g);
  if (parity == Parity::kOdd) {
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!g.edge(e).IsLoop()) {
        relabel.reversed[e] = true;
        break;
      }
    }
    // A graph made only of loops is zero in the odd quotient, so it is its
    // own negative.
  } else if (g.edge_count() >= 2) {
    std::swap(relabel.edge_map[0], relabel.edge_map[1]);
  }
  return Relabel(g, relabel.vertex_map, relabel.edge_map, relabel.reversed);
}

// Prefers an involution so that the self-pair is its own inverse.
GraphIso SignReversingAutomorphism(const DirectedOrderedGraph& g,
                                   Parity parity) {
  std::optional<GraphIso> fallback;
  for (const GraphIso& a : AutGroup(g)) {
    if (RelationSign(a, parity) > 0) continue;
    if (Compose(a, a) == IdentityIso(g)) return a;
    if (!fallback) fallback = a;
  }
  if (!fallback) {
    throw Error(ErrorCode::kPairingNotFound,
                "zero class without a sign-reversing automorphism");
  }
  return *fallback;
}

}  // namespace

std::vector<DirectedOrderedGraph> ExpandToUnitTerms(const SignedGraphSum& sum,
                                                    Parity parity) {
  std::vector<DirectedOrderedGraph> units;
  for (const SumTerm& term : sum.terms) {
    ValidateGenerator(term.graph);
    if (term.coefficient == 0) continue;
    const DirectedOrderedGraph g =
        term.coefficient > 0 ? term.graph : Negated(term.graph, parity);
    const long long copies =
        term.coefficient > 0 ? term.coefficient : -term.coefficient;
    for (long long c = 0; c < copies; ++c) units.push_back(g);
  }
  return units;
}

GammaPairing ComputeGammaPairing(const SignedGraphSum& sum, Parity parity,
                                 ZeroTermPolicy zero_terms) {
  if (!CheckClosed(sum, parity).closed) {
    throw Error(ErrorCode::kNotClosed, "boundary of the sum does not vanish");
  }
  GammaPairing pairing;
  pairing.parity = parity;
  pairing.terms = ExpandToUnitTerms(sum, parity);

  struct Item {
    int term;
    int edge;
    int weight;  // coefficient times canonicalisation sign
    GraphIso to_representative;
  };
  std::map<std::string, std::vector<Item>> groups;
  for (int a = 0; a < static_cast<int>(pairing.terms.size()); ++a) {
    const auto& g = pairing.terms[a];
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).IsLoop()) continue;
      const DirectedOrderedGraph contracted = ContractEdge(g, e);
      auto image = Canonicalize(contracted, parity);
      if (image.sign == 0) {
        if (zero_terms == ZeroTermPolicy::kSelfPair) {
          pairing.pairs.push_back(
              {a, e, a, e, SignReversingAutomorphism(contracted, parity)});
        }
        continue;
      }
      groups[CanonicalKey(image.canonical.representative)].push_back(
          {a, e, image.sign * ContractionCoefficient(g, e, parity),
           std::move(image.to_representative)});
    }
  }
  for (auto& [key, items] : groups) {
    std::vector<bool> matched(items.size(), false);
    for (std::size_t x = 0; x < items.size(); ++x) {
      if (matched[x]) continue;
      std::size_t y = x + 1;
      while (y < items.size() &&
             (matched[y] || items[y].weight != -items[x].weight)) {
        ++y;
      }
      if (y == items.size()) {
        throw Error(ErrorCode::kPairingNotFound,
                    "no cancelling partner for term " +
                        std::to_string(items[x].term + 1) + " edge " +
                        std::to_string(items[x].edge + 1));
      }
      matched[x] = matched[y] = true;
      pairing.pairs.push_back(
          {items[x].term, items[x].edge, items[y].term, items[y].edge,
           Compose(Inverse(items[y].to_representative),
                   items[x].to_representative)});
    }
  }
  std::sort(pairing.pairs.begin(), pairing.pairs.end(),
            [](const PairingEntry& p, const PairingEntry& q) {
              return std::tie(p.term_a, p.edge_i, p.term_b, p.edge_j) <
                     std::tie(q.term_a, q.edge_i, q.term_b, q.edge_j);
            });
  return pairing;
}

bool PairSignConditionHolds(const std::vector<DirectedOrderedGraph>& terms,
                            const PairingEntry& entry, Parity parity) {
  const int count = static_cast<int>(terms.size());
  if (entry.term_a < 0 || entry.term_a >= count || entry.term_b < 0 ||
      entry.term_b >= count) {
    return false;
  }
  const auto& ga = terms[entry.term_a];
  const auto& gb = terms[entry.term_b];
  if (entry.edge_i < 0 || entry.edge_i >= ga.edge_count() ||
      entry.edge_j < 0 || entry.edge_j >= gb.edge_count() ||
      ga.edge(entry.edge_i).IsLoop() || gb.edge(entry.edge_j).IsLoop()) {
    return false;
  }
  if (!IsIsomorphism(ContractEdge(ga, entry.edge_i),
                     ContractEdge(gb, entry.edge_j), entry.witness)) {
    return false;
  }
  const IsoSigns s = Signs(entry.witness, 3);
  const int relation = parity == Parity::kOdd ? s.vertex * s.arrow : s.edge;
  return relation * ContractionCoefficient(ga, entry.edge_i, parity) *
             ContractionCoefficient(gb, entry.edge_j, parity) ==
         -1;
}

}  // namespace gcx
