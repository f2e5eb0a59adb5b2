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

#ifndef WDIMK_LAYER_SEARCH_H_
#define WDIMK_LAYER_SEARCH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wdimk/vertex_set.h"

namespace wdimk {

// Exact searches over the layer-count model of K_n x K_m. A selection is an
// n x m 0-1 matrix; g holds its row sums (vertical layers) and h its column
// sums (horizontal layers).

// Gale-Ryser: a 0-1 matrix with row sums `rows` and column sums `cols`
// exists iff the sums agree and, with cols sorted nonincreasing, every prefix
// sum of cols is bounded by the matching prefix sum of the conjugate of rows.
bool GaleRyserRealizable(std::span<const int> rows, std::span<const int> cols);

// Fills rows one at a time, each into the columns with the largest remaining
// demand (ties to the lower index). Returns nullopt when the sums are not
// realizable. Result is row-major, rows.size() x cols.size().
std::optional<std::vector<uint8_t>> RealizeGreedy(std::span<const int> rows,
                                                  std::span<const int> cols);

// Smallest total of `count` layer sizes in [0, cap] whose pairwise sums are
// all at least k; nullopt when no such vector exists.
std::optional<int> MinLayerTotal(int count, int cap, int k);

// Calls `visit` with every nonincreasing vector of `count` entries in
// [0, cap] summing to `total` with all pairwise sums >= k, in decreasing
// lexicographic order. Stops early when `visit` returns false.
void ForEachLayerVector(int count, int cap, int k, int total,
                        const std::function<bool(std::span<const int>)>& visit);

struct LayerSearchOptions {
  int64_t vector_cap = 1'000'000;
  int64_t node_budget = 10'000'000;
  bool verbose = false;
};

struct LayerSearchResult {
  enum class Status { kOptimal, kBudgetExceeded, kInfeasible };
  Status status = Status::kInfeasible;
  int optimum = -1;
  std::vector<Cell> cells;
  int64_t vectors = 0;
  int64_t nodes = 0;
};

// k >= 4 only: every layer-pair constraint is on counts, so the optimum is
// the smallest total admitting count vectors g, h that pass Gale-Ryser. The
// witness is the greedy realization of the first such pair.
LayerSearchResult SolveLayerCounts(int n, int m, int k,
                                   const LayerSearchOptions& options = {});

// Any k: for each total in increasing order and each admissible (g, h) pair,
// searches 0-1 matrices with exactly those margins, rows and columns sorted by
// degree and lexicographically nonincreasing within equal-degree blocks, and
// checks the non-aligned pair constraints as rows are placed.
LayerSearchResult SolveLayerMargins(int n, int m, int k,
                                    const LayerSearchOptions& options = {});

}  // namespace wdimk

#endif  // WDIMK_LAYER_SEARCH_H_
