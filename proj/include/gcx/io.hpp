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

#ifndef GCX_IO_HPP_
#define GCX_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcx/graph.hpp"
#include "gcx/graph_complex.hpp"
#include "gcx/intlinalg.hpp"
#include "gcx/signed_perm.hpp"
#include "gcx/strata.hpp"

// JSON artifacts. All indices in files are 1-based; key order is fixed so
// that writing a parsed artifact reproduces the input byte for byte.
// Parsers throw Error(kParseError) on schema violations.
namespace gcx::io {

using Json = nlohmann::ordered_json;

std::string ParityName(Parity parity);
Parity ParseParity(const std::string& name);
std::string SgnPrimeModeName(SgnPrimeMode mode);
SgnPrimeMode ParseSgnPrimeMode(const std::string& name);

// {"vertices": n, "edges": [{"tail": t, "head": h}, ...]}
Json ToJson(const DirectedOrderedGraph& g);
DirectedOrderedGraph GraphFromJson(const Json& j);

// {"perm": [images...], "flips": [flipped indices...]}
Json ToJson(const SignedPermutation& s);
SignedPermutation SignedPermutationFromJson(const Json& j);

// {"vertex_perm": [...], "edge_perm": [...], "reversed": [edge indices...]}
Json ToJson(const GraphIso& a);
GraphIso IsoFromJson(const Json& j);

// {"terms": [{"coefficient": c, "graph": {...}}, ...]}; a bare graph object
// is read as a sum with one term of coefficient 1.
Json ToJson(const SignedGraphSum& sum);
SignedGraphSum SumFromJson(const Json& j);

struct BasisFile {
  int vertices = 0;
  int edges = 0;
  Parity parity = Parity::kOdd;
  bool allow_loops = true;
  std::vector<CanonicalClass> classes;
};
Json ToJson(const BasisFile& basis);
BasisFile BasisFromJson(const Json& j);

Json ToJson(const HomologyTable& table);
HomologyTable HomologyFromJson(const Json& j);

struct ClosedCertificate {
  Parity parity = Parity::kOdd;
  SignedGraphSum input;
  ClosedCheck check;
};
Json ToJson(const ClosedCertificate& cert);
ClosedCertificate ClosedCertificateFromJson(const Json& j);

Json ToJson(const GammaPairing& pairing);
GammaPairing PairingFromJson(const Json& j);

Json ToJson(const AuditReport& report);
AuditReport AuditFromJson(const Json& j);

struct AutReport {
  DirectedOrderedGraph graph;
  int d = 3;
  std::vector<GraphIso> automorphisms;
  long long signed_count = 0;
};
Json ToJson(const AutReport& report);
AutReport AutReportFromJson(const Json& j);

// Coordinate format, integer field, general symmetry, entries in row-major
// order.
void WriteMatrixMarket(std::ostream& out, const SparseIntMatrix& m);
SparseIntMatrix ReadMatrixMarket(std::istream& in);

// Two-space indentation plus a trailing newline.
std::string Dump(const Json& j);
Json ParseJson(const std::string& text);
Json ReadJsonFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace gcx::io

#endif  // GCX_IO_HPP_
