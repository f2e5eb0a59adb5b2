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

#ifndef WDIMK_RESOLVING_H_
#define WDIMK_RESOLVING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wdimk/graph.h"
#include "wdimk/vertex_set.h"

namespace wdimk {

// |d(x, z) - d(y, z)|.
int DeltaVertex(const Graph& g, VertexId z, VertexId x, VertexId y);

// Sum of DeltaVertex over the members of `s`; zero for the empty set.
int DeltaSet(const Graph& g, const VertexSet& s, VertexId x, VertexId y);

struct VertexPair {
  VertexId first;
  VertexId second;

  friend constexpr bool operator==(const VertexPair&,
                                   const VertexPair&) = default;
};

// Delta_S for every unordered vertex pair, plus the least pair attaining the
// minimum. The set is weak k-resolving iff min_value() >= k.
class Certificate {
 public:
  int k() const { return k_; }
  const VertexSet& set() const { return set_; }
  int min_value() const { return min_value_; }
  VertexPair min_pair() const { return min_pair_; }
  bool valid() const { return min_value_ >= k_; }

  size_t pair_count() const { return pair_values_.size(); }
  int PairValue(VertexId x, VertexId y) const;

 private:
  friend Certificate Verify(const Graph& g, const VertexSet& s, int k);

  int k_ = 0;
  int vertex_count_ = 0;
  VertexSet set_;
  // Pairs (x, y), x < y, in lexicographic order.
  std::vector<int> pair_values_;
  VertexPair min_pair_;
  int min_value_ = 0;
};

Certificate Verify(const Graph& g, const VertexSet& s, int k);

// Minimum of Delta_V(x, y) over all pairs: the largest k admitting a weak
// k-resolving set.
int KappaBruteforce(const Graph& g);

// 2 * n_2 * ... * n_r for n_1 >= n_2 >= ... >= n_r >= 2 and r >= 2.
int KappaHammingFormula(std::span<const int> dims);

enum class WdimMethod { kFormula, kBrute, kIlpFs, kIlpFsMinus, kIlpFgh };

std::string_view WdimMethodName(WdimMethod method);

struct WdimResult {
  int k = 0;
  int value = 0;
  // Absent for formula results without a known construction.
  std::optional<VertexSet> witness;
  WdimMethod method = WdimMethod::kBrute;
  bool proved_optimal = true;
  int64_t nodes = 0;
};

struct BruteforceOptions {
  int64_t node_budget = 50'000'000;
  // Bound each pair's future gain by the largest contribution still
  // available among later candidates instead of the graph diameter.
  bool exact_pair_bound = false;
};

// Smallest weak k-resolving set by cardinality-increasing lexicographic
// search with deficit pruning. The witness is the lexicographically least
// basis. Throws kKExceedsKappa or kBudgetExceeded.
WdimResult WdimExactBruteforce(const Graph& g, int k,
                               const BruteforceOptions& options = {});

// wdim_k(K_n x K_n) for n >= 3 and 2 <= k <= 2n.
int WdimFormulaSquare(int n, int k);

// wdim_1(K_n x K_n) = floor((4n - 2) / 3), n >= 3.
int MetricDimensionSquare(int n);

// Conjectured wdim_k(K_n x K_m) for n >= 3, m >= n + 1, 3 <= k <= 2n; also
// accepts k = 2 with m >= 2n.
int ConjectureFormula(int n, int m, int k);

}  // namespace wdimk

#endif  // WDIMK_RESOLVING_H_
