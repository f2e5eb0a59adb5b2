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

#ifndef WDIMK_SOLVER_H_
#define WDIMK_SOLVER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdimk/ilp_model.h"
#include "wdimk/vertex_set.h"

namespace wdimk {

struct SolveOptions {
  int64_t node_budget = 10'000'000;
  // Cap on count vectors enumerated by the layer-count paths.
  int64_t vector_cap = 1'000'000;
  // Selection used as the starting incumbent when it satisfies the model.
  std::optional<std::vector<VertexId>> hint;
  // Structured fgh paths; false forces generic branch and bound.
  bool use_structure = true;
  // JSON lines on stderr: incumbents, totals, final counters.
  bool verbose = false;
};

struct SolveResult {
  enum class Status { kOptimal, kBudgetExceeded, kInfeasible };
  Status status = Status::kInfeasible;
  // Objective value of the incumbent; -1 when none exists.
  int optimum = -1;
  bool proved_optimal = false;
  // Value of every model variable in the incumbent.
  std::vector<int> values;
  // Vertices whose s_i_j variable is 1, sorted; empty for custom models.
  std::vector<VertexId> witness;
  int64_t nodes = 0;
  // "fgh-counts", "fgh-margins" or "branch-and-bound".
  std::string method;
};

// Exact minimization of a unit-cost 0-1 model. Integer variables must be
// defined by an equality with coefficient +-1 in terms of binaries; they are
// substituted out before search. Throws kUnsupportedModel otherwise.
SolveResult Solve(const IlpModel& model, const SolveOptions& options = {});

// True when `values` satisfies every constraint, bound and kind of `model`.
bool SatisfiesModel(const IlpModel& model, const std::vector<int>& values);

}  // namespace wdimk

#endif  // WDIMK_SOLVER_H_
