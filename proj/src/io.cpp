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

#include "gcx/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace gcx::io {
namespace {

[[noreturn]] void Fail(const std::string& msg) {
  throw Error(ErrorCode::kParseError, msg);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) Fail(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) Fail(std::string("missing field '") + key + "'");
  return *it;
}

template <typename T>
T Get(const Json& j, const char* key) {
  try {
    return Field(j, key).get<T>();
  } catch (const nlohmann::json::exception&) {
    Fail(std::string("field '") + key + "' has the wrong type");
  }
}

const Json& Array(const Json& j, const char* key) {
  const Json& a = Field(j, key);
  if (!a.is_array()) Fail(std::string("field '") + key + "' is not an array");
  return a;
}

int Index(const Json& j, int size, const char* what) {
  if (!j.is_number_integer()) Fail(std::string(what) + " is not an integer");
  const long long v = j.get<long long>();
  if (v < 1 || v > size) {
    throw Error(ErrorCode::kLabelOutOfRange,
                std::string(what) + " " + std::to_string(v) + " out of range");
  }
  return static_cast<int>(v - 1);
}

std::vector<int> Permutation(const Json& j, const char* key) {
  const Json& a = Array(j, key);
  const int n = static_cast<int>(a.size());
  std::vector<int> out;
  for (const Json& x : a) out.push_back(Index(x, n, key));
  return out;
}

// Ascending 1-based index list <-> bit vector.
Json IndexList(const std::vector<bool>& bits) {
  Json out = Json::array();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out.push_back(i + 1);
  }
  return out;
}

std::vector<bool> Bits(const Json& j, const char* key, int size) {
  std::vector<bool> bits(size, false);
  for (const Json& x : Array(j, key)) {
    const int i = Index(x, size, key);
    if (bits[i]) Fail(std::string("repeated index in '") + key + "'");
    bits[i] = true;
  }
  return bits;
}

Json IntegerToJson(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer IntegerFromJson(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) Fail("malformed integer");
    return z;
  }
  Fail("expected an integer");
}

Json StringList(const std::vector<std::string>& items) {
  Json out = Json::array();
  for (const auto& s : items) out.push_back(s);
  return out;
}

std::vector<std::string> Strings(const Json& j, const char* key) {
  std::vector<std::string> out;
  for (const Json& x : Array(j, key)) {
    if (!x.is_string()) Fail(std::string("'") + key + "' holds a non-string");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::string RingName(Ring ring) {
  return ring == Ring::kIntegers ? "integers" : "rationals";
}

Json PairEntryToJson(const PairingEntry& p) {
  Json j;
  j["term_a"] = p.term_a + 1;
  j["edge_i"] = p.edge_i + 1;
  j["term_b"] = p.term_b + 1;
  j["edge_j"] = p.edge_j + 1;
  j["witness"] = ToJson(p.witness);
  return j;
}

PairingEntry PairEntryFromJson(const Json& j) {
  PairingEntry p;
  p.term_a = Get<int>(j, "term_a") - 1;
  p.edge_i = Get<int>(j, "edge_i") - 1;
  p.term_b = Get<int>(j, "term_b") - 1;
  p.edge_j = Get<int>(j, "edge_j") - 1;
  p.witness = IsoFromJson(Field(j, "witness"));
  return p;
}

Json LabelsToJson(const StratumSubset& a) {
  Json out = Json::array();
  for (int label : a.Labels()) out.push_back(label);
  return out;
}

StratumSubset LabelsFromJson(const Json& j) {
  if (!j.is_array()) Fail("subset is not an array");
  std::vector<int> labels;
  for (const Json& x : j) {
    if (!x.is_number_integer()) Fail("subset label is not an integer");
    labels.push_back(x.get<int>());
  }
  return StratumSubset::FromLabels(std::move(labels));
}

Json DimsToJson(const SubsetDimensions& s) {
  Json j;
  j["vertices"] = s.vertices_a;
  j["edges"] = s.edges_a;
  j["free_vertices"] = s.free_vertices;
  j["fiber_dimension"] = s.fiber_dimension;
  j["type3"] = s.type3;
  if (s.type3) {
    // Both sides of the inequality scaled by 3.
    j["type3_lhs"] = s.type3_lhs;
    j["type3_rhs"] = s.type3_rhs;
    j["sphere_bound"] = s.sphere_bound;
    j["type3_holds"] = s.type3_holds;
    j["codimension_holds"] = s.codimension_holds;
  }
  return j;
}

SubsetDimensions DimsFromJson(const Json& j) {
  SubsetDimensions s;
  s.vertices_a = Get<int>(j, "vertices");
  s.edges_a = Get<int>(j, "edges");
  s.free_vertices = Get<int>(j, "free_vertices");
  s.fiber_dimension = Get<long long>(j, "fiber_dimension");
  s.type3 = Get<bool>(j, "type3");
  if (s.type3) {
    s.type3_lhs = Get<long long>(j, "type3_lhs");
    s.type3_rhs = Get<long long>(j, "type3_rhs");
    s.sphere_bound = Get<long long>(j, "sphere_bound");
    s.type3_holds = Get<bool>(j, "type3_holds");
    s.codimension_holds = Get<bool>(j, "codimension_holds");
  }
  return s;
}

Json RecordToJson(const StratumRecord& r) {
  Json j;
  j["A"] = LabelsToJson(r.subset);
  j["type"] = r.type ? Json(static_cast<int>(*r.type)) : Json(nullptr);
  j["gamma_A"] = ToJson(r.gamma_a);
  j["gamma_mod_A"] = ToJson(r.gamma_mod_a);
  j["dims"] = r.type ? DimsToJson(r.dimensions) : Json(nullptr);
  if (r.type_two) {
    Json t;
    t["v_A"] = r.type_two->bivalent_vertex + 1;
    t["e1"] = r.type_two->first_edge + 1;
    t["e2"] = r.type_two->second_edge + 1;
    t["loop_degenerate"] = r.type_two->loop_degenerate;
    t["sigma"] = ToJson(r.type_two->sigma);
    j["sigma_A"] = t;
  }
  if (r.edge) {
    Json t;
    t["edge"] = *r.edge + 1;
    if (r.partner_edge) t["partner_edge"] = *r.partner_edge + 1;
    if (r.partner) t["partner"] = LabelsToJson(*r.partner);
    if (r.witness) t["witness"] = ToJson(*r.witness);
    if (r.sigma_pair) t["sigma"] = ToJson(*r.sigma_pair);
    if (r.bookkeeping_sign) t["bookkeeping_sign"] = *r.bookkeeping_sign;
    j["pair"] = t;
  }
  j["checks_passed"] = r.passed();
  j["failures"] = StringList(r.failures);
  return j;
}

StratumRecord RecordFromJson(const Json& j) {
  StratumRecord r;
  r.subset = LabelsFromJson(Field(j, "A"));
  const Json& type = Field(j, "type");
  if (!type.is_null()) {
    const int t = Get<int>(j, "type");
    if (t < 1 || t > 4) Fail("stratum type out of range");
    r.type = static_cast<StratumType>(t);
    r.dimensions = DimsFromJson(Field(j, "dims"));
    r.dimensions.subset = r.subset;
    r.dimensions.type = *r.type;
  }
  r.gamma_a = GraphFromJson(Field(j, "gamma_A"));
  r.gamma_mod_a = GraphFromJson(Field(j, "gamma_mod_A"));
  if (j.contains("sigma_A")) {
    const Json& t = j["sigma_A"];
    TypeTwoData data;
    data.bivalent_vertex = Get<int>(t, "v_A") - 1;
    data.first_edge = Get<int>(t, "e1") - 1;
    data.second_edge = Get<int>(t, "e2") - 1;
    data.loop_degenerate = Get<bool>(t, "loop_degenerate");
    data.sigma = SignedPermutationFromJson(Field(t, "sigma"));
    r.type_two = std::move(data);
  }
  if (j.contains("pair")) {
    const Json& t = j["pair"];
    r.edge = Get<int>(t, "edge") - 1;
    if (t.contains("partner_edge")) r.partner_edge = Get<int>(t, "partner_edge") - 1;
    if (t.contains("partner")) r.partner = LabelsFromJson(t["partner"]);
    if (t.contains("witness")) r.witness = IsoFromJson(t["witness"]);
    if (t.contains("sigma")) r.sigma_pair = SignedPermutationFromJson(t["sigma"]);
    if (t.contains("bookkeeping_sign")) {
      r.bookkeeping_sign = Get<int>(t, "bookkeeping_sign");
    }
  }
  r.failures = Strings(j, "failures");
  return r;
}

}  // namespace

std::string ParityName(Parity parity) {
  return parity == Parity::kOdd ? "odd" : "even";
}

Parity ParseParity(const std::string& name) {
  if (name == "odd") return Parity::kOdd;
  if (name == "even") return Parity::kEven;
  Fail("unknown parity '" + name + "'");
}

std::string SgnPrimeModeName(SgnPrimeMode mode) {
  return mode == SgnPrimeMode::kLiteral ? "literal" : "all_flips";
}

SgnPrimeMode ParseSgnPrimeMode(const std::string& name) {
  if (name == "literal") return SgnPrimeMode::kLiteral;
  if (name == "all_flips" || name == "all-flips") return SgnPrimeMode::kAllFlips;
  Fail("unknown sgn' mode '" + name + "'");
}

Json ToJson(const DirectedOrderedGraph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    Json edge;
    edge["tail"] = e.tail + 1;
    edge["head"] = e.head + 1;
    edges.push_back(std::move(edge));
  }
  j["edges"] = std::move(edges);
  return j;
}

DirectedOrderedGraph GraphFromJson(const Json& j) {
  const int n = Get<int>(j, "vertices");
  if (n < 0) Fail("negative vertex count");
  std::vector<Edge> edges;
  for (const Json& e : Array(j, "edges")) {
    edges.push_back({Index(Field(e, "tail"), n, "tail"),
                     Index(Field(e, "head"), n, "head")});
  }
  return DirectedOrderedGraph(n, std::move(edges));
}

Json ToJson(const SignedPermutation& s) {
  Json j;
  Json perm = Json::array();
  for (int i = 0; i < s.size(); ++i) perm.push_back(s.image(i) + 1);
  j["perm"] = std::move(perm);
  j["flips"] = IndexList(s.flips());
  return j;
}

SignedPermutation SignedPermutationFromJson(const Json& j) {
  std::vector<int> perm = Permutation(j, "perm");
  const int n = static_cast<int>(perm.size());
  return SignedPermutation(std::move(perm), Bits(j, "flips", n));
}

Json ToJson(const GraphIso& a) {
  Json j;
  Json vp = Json::array();
  for (int v : a.vertex_map) vp.push_back(v + 1);
  Json ep = Json::array();
  for (int e : a.edge_map) ep.push_back(e + 1);
  j["vertex_perm"] = std::move(vp);
  j["edge_perm"] = std::move(ep);
  j["reversed"] = IndexList(a.reversed);
  return j;
}

GraphIso IsoFromJson(const Json& j) {
  GraphIso a;
  a.vertex_map = Permutation(j, "vertex_perm");
  a.edge_map = Permutation(j, "edge_perm");
  a.reversed = Bits(j, "reversed", static_cast<int>(a.edge_map.size()));
  return a;
}

Json ToJson(const SignedGraphSum& sum) {
  Json terms = Json::array();
  for (const SumTerm& t : sum.terms) {
    Json term;
    term["coefficient"] = t.coefficient;
    term["graph"] = ToJson(t.graph);
    terms.push_back(std::move(term));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

SignedGraphSum SumFromJson(const Json& j) {
  SignedGraphSum sum;
  if (j.is_object() && j.contains("vertices")) {
    sum.terms.push_back({1, GraphFromJson(j)});
    return sum;
  }
  for (const Json& t : Array(j, "terms")) {
    sum.terms.push_back(
        {Get<long long>(t, "coefficient"), GraphFromJson(Field(t, "graph"))});
  }
  return sum;
}

Json ToJson(const BasisFile& basis) {
  Json j;
  j["vertices"] = basis.vertices;
  j["edges"] = basis.edges;
  j["parity"] = ParityName(basis.parity);
  j["allow_loops"] = basis.allow_loops;
  j["count"] = basis.classes.size();
  Json graphs = Json::array();
  for (std::size_t i = 0; i < basis.classes.size(); ++i) {
    Json g;
    g["index"] = i + 1;
    g["parity"] = ParityName(basis.classes[i].parity);
    g["zero"] = basis.classes[i].zero;
    g["graph"] = ToJson(basis.classes[i].representative);
    graphs.push_back(std::move(g));
  }
  j["graphs"] = std::move(graphs);
  return j;
}

BasisFile BasisFromJson(const Json& j) {
  BasisFile basis;
  basis.vertices = Get<int>(j, "vertices");
  basis.edges = Get<int>(j, "edges");
  basis.parity = ParseParity(Get<std::string>(j, "parity"));
  basis.allow_loops = Get<bool>(j, "allow_loops");
  for (const Json& g : Array(j, "graphs")) {
    CanonicalClass c;
    c.parity = ParseParity(Get<std::string>(g, "parity"));
    c.zero = Get<bool>(g, "zero");
    c.representative = GraphFromJson(Field(g, "graph"));
    if (Get<std::size_t>(g, "index") != basis.classes.size() + 1) {
      Fail("basis indices are not consecutive");
    }
    basis.classes.push_back(std::move(c));
  }
  if (Get<std::size_t>(j, "count") != basis.classes.size()) {
    Fail("basis count does not match the graph list");
  }
  return basis;
}

Json ToJson(const HomologyTable& table) {
  Json j;
  j["parity"] = ParityName(table.parity);
  j["ring"] = RingName(table.ring);
  j["loop_order"] = table.loop_order;
  j["allow_loops"] = table.allow_loops;
  Json conventions;
  conventions["loop_policy"] =
      table.allow_loops ? "self-loops admitted" : "self-loops excluded";
  conventions["torsion_caveat"] =
      table.ring == Ring::kIntegers
          ? "zero-flagged classes are removed from the basis, which is "
            "equivalent to inverting 2; 2-torsion is not represented"
          : "torsion not computed over the rationals";
  j["conventions"] = std::move(conventions);
  Json groups = Json::array();
  for (const HomologyGroup& h : table.groups) {
    Json g;
    g["vertices"] = h.vertices;
    g["edges"] = h.edges;
    g["chain_rank"] = h.chain_rank;
    g["boundary_rank_out"] = h.boundary_rank_out;
    g["boundary_rank_in"] = h.boundary_rank_in;
    g["betti"] = h.betti;
    Json torsion = Json::array();
    for (const Integer& t : h.torsion) torsion.push_back(IntegerToJson(t));
    g["torsion"] = std::move(torsion);
    groups.push_back(std::move(g));
  }
  j["groups"] = std::move(groups);
  j["notes"] = StringList(table.notes);
  return j;
}

HomologyTable HomologyFromJson(const Json& j) {
  HomologyTable table;
  table.parity = ParseParity(Get<std::string>(j, "parity"));
  const std::string ring = Get<std::string>(j, "ring");
  if (ring == "integers") {
    table.ring = Ring::kIntegers;
  } else if (ring == "rationals") {
    table.ring = Ring::kRationals;
  } else {
    Fail("unknown ring '" + ring + "'");
  }
  table.loop_order = Get<int>(j, "loop_order");
  table.allow_loops = Get<bool>(j, "allow_loops");
  for (const Json& g : Array(j, "groups")) {
    HomologyGroup h;
    h.vertices = Get<int>(g, "vertices");
    h.edges = Get<int>(g, "edges");
    h.chain_rank = Get<std::size_t>(g, "chain_rank");
    h.boundary_rank_out = Get<std::size_t>(g, "boundary_rank_out");
    h.boundary_rank_in = Get<std::size_t>(g, "boundary_rank_in");
    h.betti = Get<std::size_t>(g, "betti");
    for (const Json& t : Array(g, "torsion")) {
      h.torsion.push_back(IntegerFromJson(t));
    }
    table.groups.push_back(std::move(h));
  }
  table.notes = Strings(j, "notes");
  return table;
}

Json ToJson(const ClosedCertificate& cert) {
  Json j;
  j["parity"] = ParityName(cert.parity);
  j["closed"] = cert.check.closed;
  j["input"] = ToJson(cert.input);
  Json residual = Json::array();
  for (const ResidualTerm& r : cert.check.residual) {
    Json term;
    term["coefficient"] = IntegerToJson(r.coefficient);
    term["graph"] = ToJson(r.representative);
    residual.push_back(std::move(term));
  }
  j["residual"] = std::move(residual);
  j["omitted_loop_terms"] = cert.check.omitted_loop_terms;
  j["warnings"] = StringList(cert.check.warnings);
  return j;
}

ClosedCertificate ClosedCertificateFromJson(const Json& j) {
  ClosedCertificate cert;
  cert.parity = ParseParity(Get<std::string>(j, "parity"));
  cert.check.closed = Get<bool>(j, "closed");
  cert.input = SumFromJson(Field(j, "input"));
  for (const Json& t : Array(j, "residual")) {
    cert.check.residual.push_back({IntegerFromJson(Field(t, "coefficient")),
                                   GraphFromJson(Field(t, "graph"))});
  }
  cert.check.omitted_loop_terms = Get<std::size_t>(j, "omitted_loop_terms");
  cert.check.warnings = Strings(j, "warnings");
  return cert;
}

Json ToJson(const GammaPairing& pairing) {
  Json j;
  j["parity"] = ParityName(pairing.parity);
  Json terms = Json::array();
  for (const auto& g : pairing.terms) terms.push_back(ToJson(g));
  j["terms"] = std::move(terms);
  Json pairs = Json::array();
  for (const auto& p : pairing.pairs) pairs.push_back(PairEntryToJson(p));
  j["pairs"] = std::move(pairs);
  return j;
}

GammaPairing PairingFromJson(const Json& j) {
  GammaPairing pairing;
  pairing.parity = ParseParity(Get<std::string>(j, "parity"));
  for (const Json& g : Array(j, "terms")) {
    pairing.terms.push_back(GraphFromJson(g));
  }
  for (const Json& p : Array(j, "pairs")) {
    pairing.pairs.push_back(PairEntryFromJson(p));
  }
  return pairing;
}

Json ToJson(const AuditReport& report) {
  Json j;
  j["graph"] = ToJson(report.graph);
  j["parity"] = ParityName(report.parity);
  j["d"] = report.d;
  j["sgn_prime_mode"] = SgnPrimeModeName(report.sgn_prime_mode);
  Json summary;
  summary["degree"] = report.degree;
  summary["total_dimension"] = report.total_dimension;
  Json counts;
  for (int t = 0; t < 4; ++t) {
    counts[std::to_string(t + 1)] = report.type_counts[t];
  }
  summary["type_counts"] = std::move(counts);
  summary["subsets"] = report.records.size();
  summary["passed"] = report.passed();
  summary["failure_count"] = report.AllFailures().size();
  j["summary"] = std::move(summary);
  j["failures"] = StringList(report.failures);
  j["notes"] = StringList(report.notes);
  Json records = Json::array();
  for (const auto& r : report.records) records.push_back(RecordToJson(r));
  j["records"] = std::move(records);
  j["pairing"] = ToJson(report.pairing);
  Json extra = Json::array();
  for (const auto& p : report.non_stratum_pairs) {
    extra.push_back(PairEntryToJson(p));
  }
  j["non_stratum_pairs"] = std::move(extra);
  return j;
}

AuditReport AuditFromJson(const Json& j) {
  AuditReport report;
  report.graph = GraphFromJson(Field(j, "graph"));
  report.parity = ParseParity(Get<std::string>(j, "parity"));
  report.d = Get<int>(j, "d");
  report.sgn_prime_mode = ParseSgnPrimeMode(Get<std::string>(j, "sgn_prime_mode"));
  const Json& summary = Field(j, "summary");
  report.degree = Get<long long>(summary, "degree");
  report.total_dimension = Get<long long>(summary, "total_dimension");
  const Json& counts = Field(summary, "type_counts");
  for (int t = 0; t < 4; ++t) {
    report.type_counts[t] =
        Get<std::size_t>(counts, std::to_string(t + 1).c_str());
  }
  report.failures = Strings(j, "failures");
  report.notes = Strings(j, "notes");
  for (const Json& r : Array(j, "records")) {
    report.records.push_back(RecordFromJson(r));
  }
  report.pairing = PairingFromJson(Field(j, "pairing"));
  for (const Json& p : Array(j, "non_stratum_pairs")) {
    report.non_stratum_pairs.push_back(PairEntryFromJson(p));
  }
  return report;
}

Json ToJson(const AutReport& report) {
  Json j;
  j["graph"] = ToJson(report.graph);
  j["d"] = report.d;
  j["order"] = report.automorphisms.size();
  j["signed_count"] = report.signed_count;
  Json list = Json::array();
  for (const GraphIso& a : report.automorphisms) {
    Json entry;
    entry["iso"] = ToJson(a);
    entry["psi"] = ToJson(PsiGamma(report.graph, a));
    const IsoSigns s = Signs(a, report.d);
    Json signs;
    signs["vertex"] = s.vertex;
    signs["edge"] = s.edge;
    signs["arrow"] = s.arrow;
    signs["sgn_d"] = s.sgn_d;
    entry["signs"] = std::move(signs);
    list.push_back(std::move(entry));
  }
  j["automorphisms"] = std::move(list);
  return j;
}

AutReport AutReportFromJson(const Json& j) {
  AutReport report;
  report.graph = GraphFromJson(Field(j, "graph"));
  report.d = Get<int>(j, "d");
  report.signed_count = Get<long long>(j, "signed_count");
  for (const Json& entry : Array(j, "automorphisms")) {
    report.automorphisms.push_back(IsoFromJson(Field(entry, "iso")));
  }
  return report;
}

void WriteMatrixMarket(std::ostream& out, const SparseIntMatrix& m) {
  out << "%%MatrixMarket matrix coordinate integer general\n"
      << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
  for (const auto& [index, value] : m.entries()) {
    out << index.first + 1 << ' ' << index.second + 1 << ' ' << value << '\n';
  }
}

SparseIntMatrix ReadMatrixMarket(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) Fail("empty Matrix Market input");
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
  };
  if (banner != "%%MatrixMarket" || lower(object) != "matrix" ||
      lower(format) != "coordinate" || lower(field) != "integer" ||
      lower(symmetry) != "general") {
    Fail("expected a general integer coordinate Matrix Market header");
  }
  do {
    if (!std::getline(in, line)) Fail("missing Matrix Market size line");
  } while (line.empty() || line[0] == '%');
  std::istringstream size_line(line);
  long long rows = -1, cols = -1, count = -1;
  if (!(size_line >> rows >> cols >> count) || rows < 0 || cols < 0 ||
      count < 0) {
    Fail("malformed Matrix Market size line");
  }
  SparseIntMatrix m(rows, cols);
  long long seen = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream entry(line);
    long long i = 0, j = 0;
    std::string value;
    if (!(entry >> i >> j >> value)) Fail("malformed Matrix Market entry");
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw Error(ErrorCode::kLabelOutOfRange, "matrix entry out of range");
    }
    Integer z;
    if (z.set_str(value, 10) != 0) Fail("malformed matrix value '" + value + "'");
    m.Add(i - 1, j - 1, z);
    ++seen;
  }
  if (seen != count) Fail("Matrix Market entry count mismatch");
  return m;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    Fail(e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseJson(text.str());
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
}

}  // namespace gcx::io
