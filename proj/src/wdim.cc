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

#include "wdimk/wdim.h"

#include <algorithm>
#include <array>
#include <utility>

#include "wdimk/constructions.h"
#include "wdimk/error.h"
#include "wdimk/ilp_model.h"
#include "wdimk/solver.h"

namespace wdimk {
namespace {

constexpr std::array<std::pair<ComputeMethod, std::string_view>, 6>
    kMethodNames = {{{ComputeMethod::kAuto, "auto"},
                     {ComputeMethod::kFormula, "formula"},
                     {ComputeMethod::kBrute, "brute"},
                     {ComputeMethod::kIlpFs, "ilp:fs"},
                     {ComputeMethod::kIlpFsMinus, "ilp:fs-"},
                     {ComputeMethod::kIlpFgh, "ilp:fgh"}}};

bool IsSquare(const Graph& g) {
  return g.is_two_dimensional_hamming() && g.rows() == g.cols();
}

bool FormulaApplies(const Graph& g, int k) {
  return IsSquare(g) && g.rows() >= 3 && k >= 1 && k <= 2 * g.rows();
}

void RequireTwoDimensional(const Graph& g) {
  if (!g.is_two_dimensional_hamming()) {
    throw Error(ErrorCode::kNotTwoDimensionalHamming,
                "ILP formulations need K_n x K_m, got " + g.Describe());
  }
}

std::optional<std::vector<VertexId>> ConstructionHint(const Graph& g, int k) {
  if (!IsSquare(g) || g.rows() < 3) return std::nullopt;
  const auto construction = ConstructionForSquare(g.rows(), k);
  if (!construction) return std::nullopt;
  const VertexSet set = VertexSet::FromCells(g, construction->cells);
  return std::vector<VertexId>(set.members().begin(), set.members().end());
}

ComputeOutcome SolveIlp(const Graph& g, int k, Formulation formulation,
                        const ComputeOptions& options) {
  RequireTwoDimensional(g);
  IlpModel model;
  WdimMethod method = WdimMethod::kIlpFgh;
  switch (formulation) {
    case Formulation::kFs:
      model = BuildFs(g, k);
      method = WdimMethod::kIlpFs;
      break;
    case Formulation::kFsMinus:
      model = BuildFsMinus(g, k);
      method = WdimMethod::kIlpFsMinus;
      break;
    default:
      model = BuildFgh(g, k);
      break;
  }
  SolveOptions so;
  so.node_budget = options.node_budget;
  so.vector_cap = options.vector_cap;
  so.verbose = options.verbose;
  so.hint = ConstructionHint(g, k);
  const SolveResult sr = Solve(model, so);
  if (sr.status == SolveResult::Status::kInfeasible) {
    throw Error(ErrorCode::kKExceedsKappa,
                "no weak " + std::to_string(k) + "-resolving set in " +
                    g.Describe());
  }
  if (sr.optimum < 0) {
    throw Error(ErrorCode::kBudgetExceeded,
                "no incumbent within " + std::to_string(options.node_budget) +
                    " nodes");
  }
  ComputeOutcome out;
  out.result.k = k;
  out.result.value = sr.optimum;
  out.result.witness = VertexSet::Of(g, sr.witness);
  out.result.method = method;
  out.result.proved_optimal = sr.proved_optimal;
  out.result.nodes = sr.nodes;
  out.provenance = "search";
  out.budget_exhausted = sr.status == SolveResult::Status::kBudgetExceeded;
  return out;
}

ComputeOutcome FromFormula(const Graph& g, int k,
                           const ComputeOptions& options) {
  if (!FormulaApplies(g, k)) {
    throw Error(ErrorCode::kOutOfRange,
                "closed forms cover K_n x K_n with n >= 3 and 1 <= k <= 2n, "
                "got " + g.Describe() + " with k=" + std::to_string(k));
  }
  const int n = g.rows();
  ComputeOutcome out;
  out.result.k = k;
  out.result.method = WdimMethod::kFormula;
  out.result.proved_optimal = true;
  if (k == 1) {
    out.result.value = MetricDimensionSquare(n);
    out.provenance = "metric-dimension";
    return out;
  }
  out.result.value = WdimFormulaSquare(n, k);
  out.provenance = "theorem";
  if (const auto construction = ConstructionForSquare(n, k)) {
    out.result.witness = VertexSet::FromCells(g, construction->cells);
    return out;
  }
  // k = 2 with n < 6 has no closed construction; take a solver basis.
  ComputeOutcome solved = SolveIlp(g, k, Formulation::kFgh, options);
  if (solved.result.value != out.result.value || !solved.result.proved_optimal) {
    throw Error(ErrorCode::kInternalAssertion,
                "solver basis disagrees with the closed form");
  }
  solved.provenance = "theorem";
  return solved;
}

}  // namespace

std::string_view ComputeMethodName(ComputeMethod method) {
  for (const auto& [m, name] : kMethodNames) {
    if (m == method) return name;
  }
  return "unknown";
}

std::optional<ComputeMethod> ParseComputeMethod(std::string_view name) {
  for (const auto& [m, text] : kMethodNames) {
    if (text == name) return m;
  }
  return std::nullopt;
}

int Kappa(const Graph& g) {
  if (g.has_coordinates() && g.dims().size() >= 2) {
    std::vector<int> dims = g.dims();
    std::sort(dims.rbegin(), dims.rend());
    return KappaHammingFormula(dims);
  }
  if (g.has_coordinates()) return 2;
  return KappaBruteforce(g);
}

ComputeOutcome ComputeWdim(const Graph& g, int k, ComputeMethod method,
                           const ComputeOptions& options) {
  if (k < 1) throw Error(ErrorCode::kOutOfRange, "k must be positive");
  const int kappa = Kappa(g);
  if (k > kappa) {
    throw Error(ErrorCode::kKExceedsKappa,
                "k=" + std::to_string(k) + " exceeds kappa=" +
                    std::to_string(kappa) + " of " + g.Describe());
  }
  if (method == ComputeMethod::kAuto) {
    if (FormulaApplies(g, k)) {
      method = ComputeMethod::kFormula;
    } else if (g.is_two_dimensional_hamming()) {
      method = ComputeMethod::kIlpFgh;
    } else {
      method = ComputeMethod::kBrute;
    }
  }
  switch (method) {
    case ComputeMethod::kFormula:
      return FromFormula(g, k, options);
    case ComputeMethod::kBrute: {
      BruteforceOptions bo;
      bo.node_budget = options.brute_budget;
      ComputeOutcome out;
      out.result = WdimExactBruteforce(g, k, bo);
      out.provenance = "search";
      return out;
    }
    case ComputeMethod::kIlpFs:
      return SolveIlp(g, k, Formulation::kFs, options);
    case ComputeMethod::kIlpFsMinus:
      return SolveIlp(g, k, Formulation::kFsMinus, options);
    case ComputeMethod::kIlpFgh:
    case ComputeMethod::kAuto:
      return SolveIlp(g, k, Formulation::kFgh, options);
  }
  throw Error(ErrorCode::kInternalAssertion, "unhandled method");
}

}  // namespace wdimk
