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

#include "gcx/strata.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <exception>
#include <map>
#include <string>
#include <utility>

namespace gcx {
namespace {

std::string Describe(const StratumSubset& a) {
  std::string out = "{";
  bool first = true;
  for (int label : a.Labels()) {
    if (!first) out += ",";
    first = false;
    out += label == 0 ? std::string("inf") : std::to_string(label);
  }
  return out + "}";
}

void CheckSubset(const DirectedOrderedGraph& g, const StratumSubset& a) {
  if (a.size() < 2) {
    throw Error(ErrorCode::kSubsetTooSmall, "subset " + Describe(a) +
                                                " has fewer than 2 elements");
  }
  for (int v : a.vertices) {
    if (v < 0 || v >= g.vertex_count()) {
      throw Error(ErrorCode::kLabelOutOfRange,
                  "vertex " + std::to_string(v + 1) + " not in graph");
    }
  }
}

// Edge k of Gamma/e sits at position k or k + 1 of Gamma.
int LiftEdge(int k, int contracted) { return k < contracted ? k : k + 1; }

}  // namespace

StratumSubset StratumSubset::FromLabels(std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw Error(ErrorCode::kInvalidArgument, "subset repeats a label");
  }
  StratumSubset a;
  for (int label : labels) {
    if (label < 0) {
      throw Error(ErrorCode::kLabelOutOfRange,
                  "negative label " + std::to_string(label));
    }
    if (label == 0) {
      a.infinity = true;
    } else {
      a.vertices.push_back(label - 1);
    }
  }
  return a;
}

std::vector<int> StratumSubset::Labels() const {
  std::vector<int> out;
  if (infinity) out.push_back(0);
  for (int v : vertices) out.push_back(v + 1);
  return out;
}

StratumSubset StratumSubset::FromMask(unsigned long long mask) {
  StratumSubset a;
  a.infinity = mask & 1ULL;
  for (int bit = 1; bit < 64; ++bit) {
    if (mask >> bit & 1ULL) a.vertices.push_back(bit - 1);
  }
  return a;
}

SubgraphQuotient SubgraphAndQuotient(const DirectedOrderedGraph& g,
                                     const StratumSubset& a) {
  CheckSubset(g, a);
  DirectedOrderedGraph spanned = SpannedSubgraph(g, a.vertices);
  DirectedOrderedGraph collapsed = ContractVertexSet(g, a.vertices);
  if (a.infinity) return {std::move(collapsed), std::move(spanned)};
  return {std::move(spanned), std::move(collapsed)};
}

StratumType Classify(const DirectedOrderedGraph& g, const StratumSubset& a) {
  const DirectedOrderedGraph gamma_a = SubgraphAndQuotient(g, a).gamma_a;
  const std::vector<int> valence = gamma_a.Valences();
  const int skip = a.infinity ? 1 : 0;
  bool has_low = false;
  bool has_two = false;
  bool all_three = true;
  for (int v = skip; v < gamma_a.vertex_count(); ++v) {
    has_low |= valence[v] <= 1;
    has_two |= valence[v] == 2;
    all_three &= valence[v] >= 3;
  }
  std::vector<StratumType> matches;
  if (has_low && (a.size() >= 3 || gamma_a.edge_count() == 0)) {
    matches.push_back(StratumType::kType1);
  }
  if (has_two && !has_low) matches.push_back(StratumType::kType2);
  if (all_three) matches.push_back(StratumType::kType3);
  if (!a.infinity && gamma_a.vertex_count() == 2 &&
      gamma_a.edge_count() == 1 && !gamma_a.edge(0).IsLoop()) {
    matches.push_back(StratumType::kType4);
  }
  if (matches.size() != 1) {
    throw Error(ErrorCode::kUnclassifiable,
                "subset " + Describe(a) + " matches " +
                    std::to_string(matches.size()) + " types");
  }
  return matches.front();
}

TypeTwoData SigmaA(const DirectedOrderedGraph& g, const StratumSubset& a) {
  if (a.infinity || Classify(g, a) != StratumType::kType2) {
    throw Error(ErrorCode::kNotTypeTwo,
                "subset " + Describe(a) + " is not of type 2");
  }
  // Valences inside Gamma_A, indexed by vertices of g.
  std::vector<bool> in(g.vertex_count(), false);
  for (int v : a.vertices) in[v] = true;
  std::vector<int> valence(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    if (in[e.tail] && in[e.head]) {
      ++valence[e.tail];
      ++valence[e.head];
    }
  }
  TypeTwoData data;
  data.bivalent_vertex =
      *std::find_if(a.vertices.begin(), a.vertices.end(),
                    [&](int v) { return valence[v] == 2; });
  const int v = data.bivalent_vertex;
  std::vector<int> incident;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (in[edge.tail] && in[edge.head] && (edge.tail == v || edge.head == v)) {
      incident.push_back(e);
    }
  }
  std::vector<int> perm(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) perm[e] = e;
  std::vector<bool> flips(g.edge_count(), false);
  if (incident.size() == 1) {
    // A loop at v_A: both ends start and end at v_A.
    data.first_edge = data.second_edge = incident[0];
    data.loop_degenerate = true;
    flips[incident[0]] = true;
  } else {
    data.first_edge = incident[0];
    data.second_edge = incident[1];
    const bool first_starts = g.edge(data.first_edge).tail == v;
    const bool second_starts = g.edge(data.second_edge).tail == v;
    const bool flip = first_starts == second_starts;
    perm[data.first_edge] = data.second_edge;
    perm[data.second_edge] = data.first_edge;
    flips[data.first_edge] = flips[data.second_edge] = flip;
  }
  data.sigma = SignedPermutation(std::move(perm), std::move(flips));
  return data;
}

SignedPermutation SigmaPair(const DirectedOrderedGraph& g, int e1, int e2,
                            const GraphIso& witness) {
  const auto bad = [](const std::string& msg) {
    return Error(ErrorCode::kNotAPair, msg);
  };
  if (e1 < 0 || e1 >= g.edge_count() || e2 < 0 || e2 >= g.edge_count()) {
    throw bad("edge out of range");
  }
  if (g.edge(e1).IsLoop() || g.edge(e2).IsLoop()) {
    throw bad("a self-loop cannot be contracted");
  }
  if (!IsIsomorphism(ContractEdge(g, e1), ContractEdge(g, e2), witness)) {
    throw bad("witness is not an isomorphism between the contractions");
  }
  std::vector<int> perm(g.edge_count());
  std::vector<bool> flips(g.edge_count(), false);
  perm[e1] = e2;
  for (int k = 0; k + 1 < g.edge_count(); ++k) {
    const int from = LiftEdge(k, e1);
    perm[from] = LiftEdge(witness.edge_map[k], e2);
    flips[from] = witness.reversed[k];
  }
  return SignedPermutation(std::move(perm), std::move(flips));
}

ChamberResult ChamberClassify(const DirectedOrderedGraph& g,
                              const SignedPermutation& s, int d,
                              ChamberMode mode) {
  if (mode == ChamberMode::kStrict && g.HasRepeatedEdge()) {
    throw Error(ErrorCode::kRepeatedEdgesStrictMode,
                "graph has repeated edges");
  }
  if (s.size() != g.edge_count()) {
    throw Error(ErrorCode::kDomainMismatch,
                "signed permutation does not act on the edges of the graph");
  }
  ChamberResult result;
  for (const GraphIso& alpha : AutGroup(g)) {
    if (PsiGamma(g, alpha) != s) continue;
    result.in_image = true;
    result.orientation_sign = Signs(alpha, d).vertex == -1 && d % 2 ? -1 : 1;
    result.witness = alpha;
    break;
  }
  return result;
}

int OrientationTwist(const SignedPermutation& s, int d, SgnPrimeMode mode) {
  const int eps = s.Sgn() == -1 ? 1 : 0;
  const int eps_prime = s.SgnPrime(mode) == -1 ? 1 : 0;
  return ((d - 1) * eps + d * eps_prime) % 2 ? -1 : 1;
}

namespace {

SubsetDimensions Dimensions(const DirectedOrderedGraph& g,
                            const StratumSubset& a, StratumType type, int d) {
  const DirectedOrderedGraph gamma_a = SubgraphAndQuotient(g, a).gamma_a;
  SubsetDimensions s;
  s.subset = a;
  s.type = type;
  s.vertices_a = gamma_a.vertex_count();
  s.edges_a = gamma_a.edge_count();
  s.free_vertices = s.vertices_a - (a.infinity ? 1 : 0);
  s.fiber_dimension = static_cast<long long>(d) * s.vertices_a - d - 1;
  if (type == StratumType::kType3) {
    const long long n = s.free_vertices;
    const long long e = s.edges_a;
    s.type3 = true;
    s.type3_lhs = 3 * (d * n - d - 1);
    s.type3_rhs = 2LL * d * e - 3LL * (d + 1);
    s.sphere_bound = 3 * ((d - 1) * e - 4);
    s.type3_holds = s.type3_lhs <= s.type3_rhs;
    s.codimension_holds = s.type3_rhs <= s.sphere_bound;
  }
  return s;
}

std::vector<unsigned long long> SubsetMasks(int vertices) {
  if (vertices + 1 >= 63) {
    throw Error(ErrorCode::kInvalidArgument, "graph too large for subsets");
  }
  std::vector<unsigned long long> masks;
  const unsigned long long end = 1ULL << (vertices + 1);
  for (unsigned long long m = 0; m < end; ++m) {
    if (std::popcount(m) >= 2) masks.push_back(m);
  }
  return masks;
}

// Runs body(i) for every index, serially or across threads, rethrowing the
// first exception by index.
template <typename Body>
void ForEachIndex(std::size_t count, Execution execution, Body body) {
  if (execution == Execution::kSerial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(WorkerCount())
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void RequireTrivalent(const DirectedOrderedGraph& g) {
  if (!g.IsTrivalent()) {
    throw Error(ErrorCode::kNotTrivalent, "graph is not trivalent");
  }
}

}  // namespace

DimensionReport MakeDimensionReport(const DirectedOrderedGraph& g, int d,
                                    Execution execution) {
  RequireTrivalent(g);
  if (d < 3) throw Error(ErrorCode::kInvalidArgument, "d must be at least 3");
  DimensionReport report;
  report.d = d;
  report.degree = static_cast<long long>(g.edge_count()) * (d - 1) -
                  static_cast<long long>(d) * g.vertex_count();
  report.total_dimension = static_cast<long long>(d) * g.vertex_count();
  report.trivalent_identity_holds =
      2 * report.degree == static_cast<long long>(g.vertex_count()) * (d - 3);
  const auto masks = SubsetMasks(g.vertex_count());
  report.subsets.resize(masks.size());
  ForEachIndex(masks.size(), execution, [&](std::size_t i) {
    const StratumSubset a = StratumSubset::FromMask(masks[i]);
    report.subsets[i] = Dimensions(g, a, Classify(g, a), d);
  });
  return report;
}

bool AuditReport::passed() const { return AllFailures().empty(); }

std::vector<std::string> AuditReport::AllFailures() const {
  std::vector<std::string> out = failures;
  for (const auto& r : records) {
    for (const auto& f : r.failures) out.push_back(Describe(r.subset) + ": " + f);
  }
  return out;
}

namespace {

StratumRecord AuditSubset(const DirectedOrderedGraph& g, const StratumSubset& a,
                          int d) {
  StratumRecord rec;
  rec.subset = a;
  auto parts = SubgraphAndQuotient(g, a);
  rec.gamma_a = std::move(parts.gamma_a);
  rec.gamma_mod_a = std::move(parts.gamma_mod_a);
  try {
    rec.type = Classify(g, a);
  } catch (const Error& e) {
    rec.failures.push_back(e.what());
    return rec;
  }
  rec.dimensions = Dimensions(g, a, *rec.type, d);
  if (a.infinity && *rec.type != StratumType::kType3) {
    rec.failures.push_back("subset containing inf is not of type 3");
  }
  if (rec.dimensions.type3 && !rec.dimensions.type3_holds) {
    rec.failures.push_back("type-3 dimension inequality fails");
  }
  if (rec.dimensions.type3 && !rec.dimensions.codimension_holds) {
    rec.failures.push_back("type-3 codimension bound fails");
  }
  if (*rec.type == StratumType::kType2) {
    const TypeTwoData data = SigmaA(g, a);
    const SignedPermutation& s = data.sigma;
    if (!Compose(s, s).IsIdentity()) {
      rec.failures.push_back("sigma_A is not an involution");
    }
    for (int e = 0; e < s.size(); ++e) {
      if (e == data.first_edge || e == data.second_edge) continue;
      if (s.image(e) != e || s.flipped(e)) {
        rec.failures.push_back("sigma_A moves edge " + std::to_string(e + 1));
      }
    }
    if (!data.loop_degenerate && s.Sgn() != -1) {
      rec.failures.push_back("sigma_A is not an odd permutation");
    }
    rec.type_two = data;
  }
  if (*rec.type == StratumType::kType4) {
    const Edge joined{a.vertices[0], a.vertices[1]};
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      if ((edge.tail == joined.tail && edge.head == joined.head) ||
          (edge.tail == joined.head && edge.head == joined.tail)) {
        rec.edge = e;
      }
    }
  }
  return rec;
}

StratumSubset EdgeSubset(const DirectedOrderedGraph& g, int e) {
  return StratumSubset::FromLabels({g.edge(e).tail + 1, g.edge(e).head + 1});
}

void AttachPartner(const DirectedOrderedGraph& g, StratumRecord& rec,
                   int partner_edge, const GraphIso& witness, int d,
                   SgnPrimeMode mode, const std::vector<int>& stratum_of_edge,
                   const std::vector<StratumRecord>& records) {
  const int e = *rec.edge;
  rec.partner_edge = partner_edge;
  rec.partner = EdgeSubset(g, partner_edge);
  rec.witness = witness;
  if (stratum_of_edge[partner_edge] < 0 ||
      records[stratum_of_edge[partner_edge]].type != StratumType::kType4) {
    rec.failures.push_back("partner edge " + std::to_string(partner_edge + 1) +
                           " is not a type-4 stratum");
  }
  if (witness.vertex_map.empty() || witness.vertex_map[0] != 0) {
    rec.failures.push_back("witness does not fix the contracted vertex");
  }
  const DirectedOrderedGraph contracted = ContractEdge(g, e);
  const auto valence = contracted.Valences();
  if (valence.empty() || valence[0] != 4 ||
      std::count(valence.begin(), valence.end(), 4) != 1) {
    rec.failures.push_back(
        "contracted vertex is not the unique 4-valent vertex");
  }
  try {
    const SignedPermutation forward = SigmaPair(g, e, partner_edge, witness);
    const SignedPermutation backward =
        SigmaPair(g, partner_edge, e, Inverse(witness));
    if (backward != Inverse(forward)) {
      rec.failures.push_back("sigma of the reverse pair is not the inverse");
    }
    rec.sigma_pair = forward;
    rec.bookkeeping_sign = OrientationTwist(forward, d, mode);
  } catch (const Error& err) {
    rec.failures.push_back(err.what());
  }
}

}  // namespace

AuditReport CancellationAudit(const DirectedOrderedGraph& g, Parity parity,
                              int d, SgnPrimeMode mode, Execution execution) {
  RequireTrivalent(g);
  if (d < 3) throw Error(ErrorCode::kInvalidArgument, "d must be at least 3");
  const SignedGraphSum sum{{SumTerm{1, g}}};
  if (!CheckClosed(sum, parity).closed) {
    throw Error(ErrorCode::kNotClosed, "graph is not closed");
  }
  AuditReport report;
  report.graph = g;
  report.parity = parity;
  report.d = d;
  report.sgn_prime_mode = mode;
  report.degree = static_cast<long long>(g.edge_count()) * (d - 1) -
                  static_cast<long long>(d) * g.vertex_count();
  report.total_dimension = static_cast<long long>(d) * g.vertex_count();
  if (ParityOf(d) != parity) {
    report.notes.push_back("orientation parity differs from the parity of d");
  }

  const auto masks = SubsetMasks(g.vertex_count());
  report.records.resize(masks.size());
  ForEachIndex(masks.size(), execution, [&](std::size_t i) {
    report.records[i] = AuditSubset(g, StratumSubset::FromMask(masks[i]), d);
  });
  std::sort(report.records.begin(), report.records.end(),
            [](const StratumRecord& x, const StratumRecord& y) {
              return std::make_pair(x.subset.size(), x.subset) <
                     std::make_pair(y.subset.size(), y.subset);
            });

  std::vector<int> stratum_of_edge(g.edge_count(), -1);
  for (int i = 0; i < static_cast<int>(report.records.size()); ++i) {
    const auto& rec = report.records[i];
    if (rec.type) ++report.type_counts[static_cast<int>(*rec.type) - 1];
    if (rec.edge) stratum_of_edge[*rec.edge] = i;
  }

  report.pairing = ComputeGammaPairing(sum, parity, ZeroTermPolicy::kSelfPair);
  if (Canonicalize(g, parity).sign == 0) {
    report.notes.push_back("graph is zero in the quotient");
  }
  std::vector<bool> covered(g.edge_count(), false);
  for (const PairingEntry& p : report.pairing.pairs) {
    const int si = stratum_of_edge[p.edge_i];
    const int sj = stratum_of_edge[p.edge_j];
    if (si < 0 && sj < 0) {
      report.non_stratum_pairs.push_back(p);
      continue;
    }
    if (si >= 0) {
      covered[p.edge_i] = true;
      AttachPartner(g, report.records[si], p.edge_j, p.witness, d, mode,
                    stratum_of_edge, report.records);
    }
    if (sj >= 0 && p.edge_j != p.edge_i) {
      covered[p.edge_j] = true;
      AttachPartner(g, report.records[sj], p.edge_i, Inverse(p.witness), d,
                    mode, stratum_of_edge, report.records);
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (stratum_of_edge[e] >= 0 && !covered[e]) {
      report.records[stratum_of_edge[e]].failures.push_back(
          "type-4 stratum is not paired");
    }
  }
  return report;
}

}  // namespace gcx
