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

#ifndef WDIMK_WDIM_H_
#define WDIMK_WDIM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "wdimk/graph.h"
#include "wdimk/resolving.h"

namespace wdimk {

enum class ComputeMethod { kAuto, kFormula, kBrute, kIlpFs, kIlpFsMinus, kIlpFgh };

// "auto", "formula", "brute", "ilp:fs", "ilp:fs-", "ilp:fgh".
std::string_view ComputeMethodName(ComputeMethod method);
std::optional<ComputeMethod> ParseComputeMethod(std::string_view name);

struct ComputeOptions {
  int64_t node_budget = 10'000'000;
  int64_t brute_budget = 50'000'000;
  int64_t vector_cap = 1'000'000;
  bool verbose = false;
};

struct ComputeOutcome {
  WdimResult result;
  // Source of the value: "theorem" (closed form for K_n x K_n, 2 <= k <= 2n),
  // "metric-dimension" (k = 1 closed form) or "search".
  std::string provenance;
  // Incumbent size when the budget ran out; result.value holds it too.
  bool budget_exhausted = false;
};

// kappa for any graph: the product formula for Hamming kinds with at least
// two factors, 2 for a single clique, brute force otherwise.
int Kappa(const Graph& g);

// wdim_k(g) by the requested method. auto picks the formula on K_n x K_n with
// n >= 3 and 1 <= k <= 2n, the fgh model on other 2D Hamming graphs, and the
// brute-force search elsewhere. Throws kKExceedsKappa when k > kappa(g),
// kOutOfRange when the method does not apply, and kBudgetExceeded when a
// search ends without any incumbent.
ComputeOutcome ComputeWdim(const Graph& g, int k, ComputeMethod method,
                           const ComputeOptions& options = {});

}  // namespace wdimk

#endif  // WDIMK_WDIM_H_
