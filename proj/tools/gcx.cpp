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

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gcx/graph_complex.hpp"
#include "gcx/io.hpp"
#include "gcx/selftest.hpp"
#include "gcx/strata.hpp"

namespace {

using gcx::io::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

int ReportError(const std::string& name, const std::string& message,
                int code) {
  Json j;
  j["error"] = name;
  j["message"] = message;
  std::cerr << j.dump() << '\n';
  return code;
}

void Emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    gcx::io::WriteTextFile(out, text);
  }
}

struct Options {
  int vertices = 0;
  int edges = 0;
  int loop_order = 2;
  int d = 3;
  std::string parity = "odd";
  std::optional<std::string> parity_override;
  bool no_loops = false;
  std::string ring = "rationals";
  std::string graph_path;
  std::string out;
  std::string sgn_prime = "literal";
  std::string zero_terms = "skip";
  int max_loop_order = 3;
};

gcx::SignedGraphSum ReadSum(const std::string& path) {
  return gcx::io::SumFromJson(gcx::io::ReadJsonFile(path));
}

int RunBasis(const Options& o) {
  const auto parity = gcx::io::ParseParity(o.parity);
  gcx::io::BasisFile file{o.vertices, o.edges, parity, !o.no_loops,
                          gcx::EnumerateBasis(o.vertices, o.edges, parity,
                                              !o.no_loops)};
  Emit(gcx::io::Dump(gcx::io::ToJson(file)), o.out);
  return kOk;
}

int RunBoundary(const Options& o) {
  const auto parity = gcx::io::ParseParity(o.parity);
  const auto source =
      gcx::GraphBasis::Enumerate(o.vertices, o.edges, parity, !o.no_loops);
  const auto target = gcx::GraphBasis::Enumerate(o.vertices - 1, o.edges - 1,
                                                 parity, !o.no_loops);
  std::ostringstream text;
  gcx::io::WriteMatrixMarket(text, gcx::BoundaryMatrix(source, target));
  Emit(text.str(), o.out);
  return kOk;
}

int RunHomology(const Options& o) {
  const auto parity = gcx::io::ParseParity(o.parity);
  gcx::Ring ring;
  if (o.ring == "rationals") {
    ring = gcx::Ring::kRationals;
  } else if (o.ring == "integers") {
    ring = gcx::Ring::kIntegers;
  } else {
    throw gcx::Error(gcx::ErrorCode::kInvalidArgument,
                     "unknown ring '" + o.ring + "'");
  }
  const auto table =
      gcx::HomologyForLoopOrder(o.loop_order, parity, ring, !o.no_loops);
  Emit(gcx::io::Dump(gcx::io::ToJson(table)), o.out);
  return kOk;
}

int RunCheckClosed(const Options& o) {
  const auto parity = gcx::io::ParseParity(o.parity);
  gcx::io::ClosedCertificate cert;
  cert.parity = parity;
  cert.input = ReadSum(o.graph_path);
  cert.check = gcx::CheckClosed(cert.input, parity);
  Emit(gcx::io::Dump(gcx::io::ToJson(cert)), o.out);
  return cert.check.closed ? kOk : kCheckFailed;
}

int RunPairing(const Options& o) {
  const auto parity = gcx::io::ParseParity(o.parity);
  gcx::ZeroTermPolicy policy;
  if (o.zero_terms == "skip") {
    policy = gcx::ZeroTermPolicy::kSkip;
  } else if (o.zero_terms == "self-pair") {
    policy = gcx::ZeroTermPolicy::kSelfPair;
  } else {
    throw gcx::Error(gcx::ErrorCode::kInvalidArgument,
                     "unknown zero-term policy '" + o.zero_terms + "'");
  }
  const auto pairing =
      gcx::ComputeGammaPairing(ReadSum(o.graph_path), parity, policy);
  Emit(gcx::io::Dump(gcx::io::ToJson(pairing)), o.out);
  return kOk;
}

int RunStrata(const Options& o) {
  const auto parity = o.parity_override
                          ? gcx::io::ParseParity(*o.parity_override)
                          : gcx::ParityOf(o.d);
  const auto graph = gcx::io::GraphFromJson(gcx::io::ReadJsonFile(o.graph_path));
  gcx::ValidateGenerator(graph);
  const auto report = gcx::CancellationAudit(
      graph, parity, o.d, gcx::io::ParseSgnPrimeMode(o.sgn_prime));
  Emit(gcx::io::Dump(gcx::io::ToJson(report)), o.out);
  return report.passed() ? kOk : kCheckFailed;
}

int RunAut(const Options& o) {
  gcx::io::AutReport report;
  report.graph = gcx::io::GraphFromJson(gcx::io::ReadJsonFile(o.graph_path));
  report.d = o.d;
  report.automorphisms = gcx::AutGroup(report.graph);
  report.signed_count = gcx::SignedAutCount(report.graph, o.d);
  Emit(gcx::io::Dump(gcx::io::ToJson(report)), o.out);
  return kOk;
}

int RunSelfTest(const Options& o) {
  bool all = true;
  Json list = Json::array();
  for (const auto& r : gcx::RunSelfTest(o.max_loop_order)) {
    Json entry;
    entry["name"] = r.name;
    entry["passed"] = r.passed;
    entry["detail"] = r.detail;
    list.push_back(std::move(entry));
    all &= r.passed;
  }
  Json j;
  j["max_loop_order"] = o.max_loop_order;
  j["passed"] = all;
  j["checks"] = std::move(list);
  Emit(gcx::io::Dump(j), o.out);
  return all ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph complex and boundary stratum calculus"};
  app.require_subcommand(1);
  Options o;

  auto add_parity = [&](CLI::App* sub) {
    sub->add_option("--parity", o.parity, "odd or even")
        ->check(CLI::IsMember({"odd", "even"}));
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("-o,--out", o.out, "output file (default: stdout)");
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph_path, "graph or sum JSON")->required();
  };
  auto add_bidegree = [&](CLI::App* sub) {
    sub->add_option("--vertices", o.vertices)->required();
    sub->add_option("--edges", o.edges)->required();
    sub->add_flag("--no-loops", o.no_loops, "exclude self-loops");
  };

  auto* basis = app.add_subcommand("basis", "enumerate a graph basis");
  add_bidegree(basis);
  add_parity(basis);
  add_out(basis);

  auto* boundary = app.add_subcommand(
      "boundary", "boundary matrix (V,E) -> (V-1,E-1) in Matrix Market");
  add_bidegree(boundary);
  add_parity(boundary);
  add_out(boundary);

  auto* homology = app.add_subcommand("homology", "rank and torsion table");
  homology->add_option("--loop-order", o.loop_order)->required();
  homology->add_option("--ring", o.ring)
      ->check(CLI::IsMember({"rationals", "integers"}));
  homology->add_flag("--no-loops", o.no_loops, "exclude self-loops");
  add_parity(homology);
  add_out(homology);

  auto* check = app.add_subcommand("check-closed", "closedness certificate");
  add_graph(check);
  add_parity(check);
  add_out(check);

  auto* pairing = app.add_subcommand("pairing", "Gamma-pairing certificate");
  add_graph(pairing);
  add_parity(pairing);
  pairing->add_option("--zero-terms", o.zero_terms, "skip or self-pair")
      ->check(CLI::IsMember({"skip", "self-pair"}));
  add_out(pairing);

  auto* strata = app.add_subcommand("strata", "stratum cancellation audit");
  add_graph(strata);
  strata->add_option("--d", o.d, "dimension, at least 3")
      ->check(CLI::Range(3, 1 << 20));
  strata->add_option("--parity", o.parity_override,
                     "orientation parity (default: parity of d)")
      ->check(CLI::IsMember({"odd", "even"}));
  strata->add_option("--sgn-prime", o.sgn_prime, "literal or all_flips")
      ->check(CLI::IsMember({"literal", "all_flips", "all-flips"}));
  add_out(strata);

  auto* aut = app.add_subcommand("aut", "automorphisms and signed count");
  add_graph(aut);
  aut->add_option("--d", o.d)->check(CLI::Range(3, 1 << 20));
  add_out(aut);

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
  selftest->add_option("--max-loop-order", o.max_loop_order)
      ->check(CLI::Range(2, 4));
  add_out(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return ReportError("UsageError", e.what(), kInputError);
  }

  try {
    if (*basis) return RunBasis(o);
    if (*boundary) return RunBoundary(o);
    if (*homology) return RunHomology(o);
    if (*check) return RunCheckClosed(o);
    if (*pairing) return RunPairing(o);
    if (*strata) return RunStrata(o);
    if (*aut) return RunAut(o);
    if (*selftest) return RunSelfTest(o);
  } catch (const gcx::Error& e) {
    const bool check_failure = e.code() == gcx::ErrorCode::kNotClosed ||
                               e.code() == gcx::ErrorCode::kAuditFailure;
    return ReportError(std::string(gcx::ErrorCodeName(e.code())), e.detail(),
                       check_failure ? kCheckFailed : kInputError);
  } catch (const std::exception& e) {
    return ReportError("InternalError", e.what(), kInputError);
  }
  return kInputError;
}
