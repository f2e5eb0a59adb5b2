// Copyright 2026 The wdimk Authors
//
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

// wdimk: weak k-resolving sets of Hamming graphs from the command line.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wdimk/constructions.h"
#include "wdimk/error.h"
#include "wdimk/ilp_model.h"
#include "wdimk/lp_format.h"
#include "wdimk/report.h"
#include "wdimk/resolving.h"
#include "wdimk/solver.h"
#include "wdimk/table.h"
#include "wdimk/wdim.h"

namespace {

using wdimk::ErrorCode;
using wdimk::Json;

enum Exit : int {
  kOk = 0,
  kInvalid = 1,
  kIncumbent = 2,
  kInfeasibleK = 3,
  kUsage = 64,
  kDataError = 65,
  kSoftware = 70,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "json";
  int64_t budget = 0;  // 0: default or WDIMK_BUDGET
  bool verbose = false;
  std::chrono::steady_clock::time_point start;
};

int64_t NodeBudget(const Globals& g) {
  if (g.budget > 0) return g.budget;
  if (const char* env = std::getenv("WDIMK_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw UsageError("WDIMK_BUDGET must be a positive integer");
  }
  return wdimk::SolveOptions{}.node_budget;
}

wdimk::ComputeOptions Options(const Globals& g) {
  wdimk::ComputeOptions o;
  o.node_budget = NodeBudget(g);
  if (g.budget > 0 || std::getenv("WDIMK_BUDGET")) o.brute_budget = o.node_budget;
  o.verbose = g.verbose;
  return o;
}

bool Csv(const Globals& g) { return g.format == "csv"; }

// Graph description without commas, for CSV fields.
std::string CsvName(const wdimk::Graph& graph) {
  std::string name = graph.Describe();
  std::replace(name.begin(), name.end(), ',', 'x');
  return name;
}

void Emit(const Globals& g, Json payload) {
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - g.start)
                        .count();
  payload["meta"] = {{"elapsed_ms", static_cast<int64_t>(ms)}};
  std::cout << payload.dump() << '\n';
}

wdimk::Graph GraphFromSpec(const std::string& text) {
  const auto spec = wdimk::ParseGraphSpec(text);
  if (!spec) {
    throw UsageError("bad graph spec '" + text +
                     "' (hamming:n,m | hamming:n1,...,nr | hypercube:r | "
                     "file:PATH)");
  }
  return wdimk::BuildGraph(*spec);
}

wdimk::IntRange ParseRange(const std::string& text, const char* what) {
  wdimk::IntRange r;
  const size_t dots = text.find("..");
  try {
    size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string a = text.substr(0, dots);
      const std::string b = text.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(text);
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(text);
    }
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + " range '" + text +
                     "' (expected A or A..B)");
  }
  if (r.lo > r.hi) throw UsageError(std::string("empty ") + what + " range");
  return r;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wdimk::Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int ExitFor(const wdimk::Error& e) {
  switch (e.code()) {
    case ErrorCode::kKExceedsKappa:
    case ErrorCode::kInfeasible:
      return kInfeasibleK;
    case ErrorCode::kBudgetExceeded:
      return kIncumbent;
    case ErrorCode::kParseError:
    case ErrorCode::kIoError:
    case ErrorCode::kDisconnected:
    case ErrorCode::kSelfLoop:
    case ErrorCode::kIndexOutOfRange:
    case ErrorCode::kDuplicateVertex:
    case ErrorCode::kUnsupportedModel:
      return kDataError;
    case ErrorCode::kInternalAssertion:
      return kSoftware;
    default:
      return kUsage;
  }
}

// ---- subcommands ----

int RunKappa(const Globals& g, const std::string& spec) {
  const wdimk::Graph graph = GraphFromSpec(spec);
  const bool has_formula = graph.has_coordinates();
  const bool brute = !has_formula || graph.vertex_count() <= 400;
  const int kappa = has_formula ? wdimk::Kappa(graph)
                                : wdimk::KappaBruteforce(graph);
  std::string method = has_formula ? "formula" : "brute";
  if (has_formula && brute) {
    const int check = wdimk::KappaBruteforce(graph);
    if (check != kappa) {
      throw wdimk::Error(ErrorCode::kInternalAssertion,
                         "kappa formula disagrees with brute force");
    }
    method = "formula+brute";
  }
  if (Csv(g)) {
    std::cout << "graph,kappa,method\n"
              << CsvName(graph) << ',' << kappa << ',' << method << '\n';
    return kOk;
  }
  Json j;
  j["graph"] = wdimk::GraphJson(graph);
  j["kappa"] = kappa;
  j["method"] = method;
  Emit(g, std::move(j));
  return kOk;
}

int RunCompute(const Globals& g, const std::string& spec, int k,
               const std::string& method_name) {
  const auto method = wdimk::ParseComputeMethod(method_name);
  if (!method) throw UsageError("unknown method '" + method_name + "'");
  const wdimk::Graph graph = GraphFromSpec(spec);
  const wdimk::ComputeOutcome out =
      wdimk::ComputeWdim(graph, k, *method, Options(g));
  if (Csv(g)) {
    std::cout << "graph,k,value,method,provenance,proved_optimal\n"
              << CsvName(graph) << ',' << k << ',' << out.result.value << ','
              << wdimk::WdimMethodName(out.result.method) << ','
              << out.provenance << ',' << (out.result.proved_optimal ? 1 : 0)
              << '\n';
  } else {
    Emit(g, wdimk::WdimJson(graph, out));
  }
  return out.result.proved_optimal ? kOk : kIncumbent;
}

int RunVerify(const Globals& g, const std::string& spec,
              const std::string& set_path, int k) {
  const wdimk::Graph graph = GraphFromSpec(spec);
  const auto coords = wdimk::ParseSetText(ReadFile(set_path));
  const wdimk::VertexSet set = wdimk::SetFromCoordinates(graph, coords);
  const wdimk::Certificate cert = wdimk::Verify(graph, set, k);
  if (Csv(g)) {
    std::cout << "k,size,min_value,valid\n"
              << k << ',' << set.size() << ',' << cert.min_value() << ','
              << (cert.valid() ? 1 : 0) << '\n';
  } else {
    Emit(g, wdimk::CertificateJson(graph, cert));
  }
  return cert.valid() ? kOk : kInvalid;
}

int RunConstruct(const Globals& g, const std::string& family, int n, int t,
                 int i) {
  std::vector<wdimk::Cell> cells;
  int k = 0;
  if (family == "diagonal") {
    cells = wdimk::ConstructDiagonal(n, i);
  } else if (family == "xt") {
    cells = wdimk::ConstructXt(n, t);
    k = 2 * n - 2 * t;
  } else if (family == "xtprime") {
    cells = wdimk::ConstructXtPrime(n, t);
    k = 2 * n - 2 * t - 1;
  } else if (family == "yn") {
    cells = wdimk::ConstructYn(n);
    k = 2;
  } else {
    throw UsageError("unknown family '" + family +
                     "' (diagonal, xt, xtprime, yn)");
  }
  const wdimk::Graph graph = wdimk::MakeHamming({n, n});
  const wdimk::VertexSet set = wdimk::VertexSet::FromCells(graph, cells);
  // A diagonal guarantees no k; its certificate at the attained value (at
  // least 1) is informational only.
  if (k == 0) k = std::max(1, wdimk::Verify(graph, set, 1).min_value());
  const wdimk::Certificate cert = wdimk::Verify(graph, set, k);
  if (Csv(g)) {
    std::cout << "i,j\n";
    for (const auto& c : cells) std::cout << c.row << ',' << c.col << '\n';
  } else {
    Json j;
    j["family"] = family;
    j["n"] = n;
    if (family == "xt" || family == "xtprime") j["t"] = t;
    if (family == "diagonal") j["i"] = i;
    j["size"] = set.size();
    j["certificate"] = wdimk::CertificateJson(graph, cert);
    Emit(g, std::move(j));
  }
  return cert.valid() || family == "diagonal" ? kOk : kInvalid;
}

int RunExport(const Globals& g, const std::string& spec, int k,
              const std::string& form, const std::string& out_path) {
  const auto formulation = wdimk::ParseFormulationName(form);
  if (!formulation || *formulation == wdimk::Formulation::kCustom) {
    throw UsageError("unknown formulation '" + form + "' (fs, fs-, fgh)");
  }
  const wdimk::Graph graph = GraphFromSpec(spec);
  wdimk::IlpModel model;
  switch (*formulation) {
    case wdimk::Formulation::kFs: model = wdimk::BuildFs(graph, k); break;
    case wdimk::Formulation::kFsMinus:
      model = wdimk::BuildFsMinus(graph, k);
      break;
    default: model = wdimk::BuildFgh(graph, k); break;
  }
  if (out_path.empty() || out_path == "-") {
    wdimk::WriteLp(model, std::cout);
    return kOk;
  }
  wdimk::ExportLp(model, out_path);
  if (Csv(g)) {
    std::cout << "path,variables,constraints\n"
              << out_path << ',' << model.variables.size() << ','
              << model.constraints.size() << '\n';
  } else {
    Json j;
    j["path"] = out_path;
    j["formulation"] = wdimk::FormulationName(model.meta.formulation);
    j["variables"] = model.variables.size();
    j["constraints"] = model.constraints.size();
    Emit(g, std::move(j));
  }
  return kOk;
}

int RunParse(const Globals& g, const std::string& path, bool solve) {
  const wdimk::IlpModel model = wdimk::ParseLpFile(path);
  Json j;
  j["formulation"] = wdimk::FormulationName(model.meta.formulation);
  j["dims"] = model.meta.dims;
  j["k"] = model.meta.k;
  j["variables"] = model.variables.size();
  j["constraints"] = model.constraints.size();
  int code = kOk;
  if (solve) {
    wdimk::SolveOptions so;
    so.node_budget = NodeBudget(g);
    so.verbose = g.verbose;
    const wdimk::SolveResult r = wdimk::Solve(model, so);
    if (r.status == wdimk::SolveResult::Status::kInfeasible) {
      j["status"] = "infeasible";
      code = kInfeasibleK;
    } else {
      j["status"] = r.proved_optimal ? "optimal" : "incumbent";
      j["optimum"] = r.optimum;
      j["solver"] = r.method;
      j["nodes"] = r.nodes;
      Json sel = Json::array();
      for (size_t v = 0; v < r.values.size(); ++v) {
        if (model.variables[v].kind == wdimk::VarKind::kBinary && r.values[v]) {
          sel.push_back(model.variables[v].name);
        }
      }
      j["selected"] = std::move(sel);
      code = r.proved_optimal ? kOk : kIncumbent;
    }
  }
  if (Csv(g)) {
    std::cout << "formulation,variables,constraints,optimum\n"
              << wdimk::FormulationName(model.meta.formulation) << ','
              << model.variables.size() << ',' << model.constraints.size()
              << ',' << (j.contains("optimum") ? j["optimum"].dump() : "")
              << '\n';
  } else {
    Emit(g, std::move(j));
  }
  return code;
}

int RunTable(const Globals& g, int n, const std::string& ms,
             const std::string& ks, const std::string& method_name,
             const std::string& expected_path) {
  const auto method = wdimk::ParseComputeMethod(method_name);
  if (!method) throw UsageError("unknown method '" + method_name + "'");
  const wdimk::IntRange m_range = ParseRange(ms, "m");
  const wdimk::IntRange k_range = ParseRange(ks, "k");
  std::optional<wdimk::ExpectedTable> expected;
  if (!expected_path.empty()) expected = wdimk::LoadExpectedCsv(expected_path);
  const wdimk::TableReport report =
      wdimk::RunTable(n, m_range, k_range, *method, Options(g),
                      expected ? &*expected : nullptr);
  if (Csv(g)) {
    wdimk::WriteTableCsv(std::cout, report);
  } else {
    Emit(g, wdimk::TableJson(report));
  }
  for (const auto& mm : report.mismatches) {
    std::cerr << "mismatch k=" << mm.k << " m=" << mm.m
              << " expected=" << mm.expected << " actual=" << mm.actual
              << '\n';
  }
  if (!report.mismatches.empty()) return kInvalid;
  for (const auto& c : report.cells) {
    if (c.status == wdimk::TableCell::Status::kIncumbent) return kIncumbent;
  }
  return kOk;
}

int RunConjecture(const Globals& g, int n, const std::string& ms,
                  const std::string& ks) {
  const wdimk::ConjectureReport report = wdimk::RunConjectureAudit(
      n, ParseRange(ms, "m"), ParseRange(ks, "k"), Options(g));
  if (Csv(g)) {
    wdimk::WriteConjectureCsv(std::cout, report);
  } else {
    Emit(g, wdimk::ConjectureJson(report));
  }
  if (report.violations > 0) return kInvalid;
  return report.unproved > 0 ? kIncumbent : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  g.start = std::chrono::steady_clock::now();
  CLI::App app{"Weak k-resolving sets and wdim_k of Hamming graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--budget", g.budget,
                 "Node budget (overrides WDIMK_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--verbose", g.verbose, "Solver telemetry on stderr");

  std::string spec, method = "auto", set_path, family, form, out_path,
              expected, ms, ks;
  int k = 0, n = 0, t = -1, i = 0;
  bool solve = false;

  auto* kappa = app.add_subcommand("kappa", "Largest k with a weak k-resolving set");
  kappa->add_option("graph", spec, "Graph spec")->required();

  auto* compute = app.add_subcommand("compute", "wdim_k with a witness");
  compute->add_option("graph", spec, "Graph spec")->required();
  compute->add_option("-k", k, "Threshold")->required();
  compute->add_option("--method", method,
                      "auto|formula|brute|ilp:fs|ilp:fs-|ilp:fgh");

  auto* verify = app.add_subcommand("verify", "Certify a vertex set");
  verify->add_option("graph", spec, "Graph spec")->required();
  verify->add_option("set", set_path, "Set file (coordinates)")->required();
  verify->add_option("-k", k, "Threshold")->required();

  auto* construct = app.add_subcommand("construct", "Build a K_n x K_n family");
  construct->add_option("family", family, "diagonal|xt|xtprime|yn")->required();
  construct->add_option("--n", n, "Order n")->required();
  construct->add_option("--t", t, "Parameter t (xt, xtprime)");
  construct->add_option("--i", i, "Diagonal index");

  auto* exporter = app.add_subcommand("export", "Write an LP model");
  exporter->add_option("graph", spec, "Graph spec")->required();
  exporter->add_option("-k", k, "Threshold")->required();
  exporter->add_option("--form", form, "fs|fs-|fgh")->required();
  exporter->add_option("-o,--output", out_path, "Output path ('-' for stdout)");

  auto* parse = app.add_subcommand("parse", "Read an LP model");
  parse->add_option("path", set_path, "LP file")->required();
  parse->add_flag("--solve", solve, "Solve the model");

  auto* table = app.add_subcommand("table", "wdim_k(K_n x K_m) over a grid");
  table->add_option("--n", n, "Order n")->required();
  table->add_option("--m", ms, "m range, A..B")->required();
  table->add_option("-k,--k", ks, "k range, A..B")->required();
  table->add_option("--method", method, "Computation method");
  table->add_option("--expected", expected, "Expected values CSV");

  auto* conjecture = app.add_subcommand("conjecture", "Audit the m > n formula");
  conjecture->add_option("--n", n, "Order n")->required();
  conjecture->add_option("--m", ms, "m range, A..B")->required();
  conjecture->add_option("-k,--k", ks, "k range, A..B")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*kappa) return RunKappa(g, spec);
    if (*compute) return RunCompute(g, spec, k, method);
    if (*verify) return RunVerify(g, spec, set_path, k);
    if (*construct) {
      if ((family == "xt" || family == "xtprime") && t < 0) {
        throw UsageError(family + " needs --t");
      }
      return RunConstruct(g, family, n, t, i);
    }
    if (*exporter) return RunExport(g, spec, k, form, out_path);
    if (*parse) return RunParse(g, set_path, solve);
    if (*table) return RunTable(g, n, ms, ks, method, expected);
    if (*conjecture) return RunConjecture(g, n, ms, ks);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const wdimk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitFor(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSoftware;
  }
  return kUsage;
}
