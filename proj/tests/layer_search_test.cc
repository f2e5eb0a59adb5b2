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

#include <algorithm>
#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "oracles.h"
#include "wdimk/error.h"
#include "wdimk/layer_search.h"
#include "wdimk/resolving.h"

namespace wdimk {
namespace {

using Margins = std::pair<std::vector<int>, std::vector<int>>;

// Every (row sums, column sums) pair realized by some r x c 0-1 matrix.
std::set<Margins> AllMargins(int r, int c) {
  std::set<Margins> out;
  for (uint32_t mask = 0; mask < (1u << (r * c)); ++mask) {
    std::vector<int> rows(r, 0), cols(c, 0);
    for (int p = 0; p < r * c; ++p) {
      if (mask >> p & 1u) {
        ++rows[p / c];
        ++cols[p % c];
      }
    }
    out.insert({rows, cols});
  }
  return out;
}

void ForEachVector(int len, int cap, const std::function<void(std::vector<int>&)>& fn) {
  std::vector<int> v(len, 0);
  while (true) {
    fn(v);
    int p = 0;
    while (p < len && v[p] == cap) v[p++] = 0;
    if (p == len) return;
    ++v[p];
  }
}

TEST(GaleRyserTest, MatchesExhaustiveMatrices) {
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 4; ++c) {
      const auto realizable = AllMargins(r, c);
      ForEachVector(r, c, [&](std::vector<int>& rows) {
        ForEachVector(c, r, [&](std::vector<int>& cols) {
          const bool want = realizable.count({rows, cols}) > 0;
          ASSERT_EQ(GaleRyserRealizable(rows, cols), want);
          const auto matrix = RealizeGreedy(rows, cols);
          ASSERT_EQ(matrix.has_value(), want);
          if (!matrix) return;
          std::vector<int> rr(r, 0), cc(c, 0);
          for (int p = 0; p < r * c; ++p) {
            rr[p / c] += (*matrix)[p];
            cc[p % c] += (*matrix)[p];
          }
          ASSERT_EQ(rr, rows);
          ASSERT_EQ(cc, cols);
        });
      });
    }
  }
}

TEST(GaleRyserTest, RejectsOutOfRangeSums) {
  EXPECT_FALSE(GaleRyserRealizable(std::vector<int>{3}, std::vector<int>{1, 1}));
  EXPECT_FALSE(GaleRyserRealizable(std::vector<int>{1, -1}, std::vector<int>{0}));
  EXPECT_FALSE(GaleRyserRealizable(std::vector<int>{1}, std::vector<int>{0, 0}));
}

// Plain enumeration oracle for the count vectors.
std::vector<std::vector<int>> VectorsOracle(int count, int cap, int k, int total) {
  std::vector<std::vector<int>> out;
  ForEachVector(count, cap, [&](std::vector<int>& v) {
    int sum = 0;
    for (int x : v) sum += x;
    if (sum != total || !std::is_sorted(v.rbegin(), v.rend())) return;
    for (int a = 0; a < count; ++a) {
      for (int b = a + 1; b < count; ++b) {
        if (v[a] + v[b] < k) return;
      }
    }
    out.push_back(v);
  });
  std::sort(out.rbegin(), out.rend());
  return out;
}

TEST(LayerVectorTest, EnumerationAndMinimumMatchOracle) {
  for (int count = 1; count <= 5; ++count) {
    for (int cap = 1; cap <= 4; ++cap) {
      for (int k = 1; k <= 2 * cap + 1; ++k) {
        std::optional<int> min_total;
        for (int total = 0; total <= count * cap; ++total) {
          std::vector<std::vector<int>> got;
          ForEachLayerVector(count, cap, k, total, [&](std::span<const int> v) {
            got.emplace_back(v.begin(), v.end());
            return true;
          });
          const auto want = VectorsOracle(count, cap, k, total);
          ASSERT_EQ(got, want) << count << " " << cap << " " << k << " " << total;
          if (!want.empty() && !min_total) min_total = total;
        }
        EXPECT_EQ(MinLayerTotal(count, cap, k), min_total)
            << count << " " << cap << " " << k;
      }
    }
  }
}

TEST(LayerVectorTest, VisitorCanStopEarly) {
  int calls = 0;
  ForEachLayerVector(4, 4, 2, 8, [&](std::span<const int>) {
    ++calls;
    return calls < 2;
  });
  EXPECT_EQ(calls, 2);
}

// Both searches agree with plain subset enumeration on small grids.
TEST(LayerSearchTest, MatchesSubsetOracle) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {2, 5}}) {
    const Graph g = MakeHamming({n, m});
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.vertex_count(); ++u) {
      for (int v : g.Neighbors(u)) {
        if (u < v) edges.emplace_back(u, v);
      }
    }
    const auto d = testing::BfsAllPairs(g.vertex_count(), edges);
    for (int k = 1; k <= 2 * std::min(n, m); ++k) {
      const int want = testing::WdimBySubsets(d, k);
      const auto margins = SolveLayerMargins(n, m, k);
      ASSERT_EQ(margins.status, LayerSearchResult::Status::kOptimal);
      EXPECT_EQ(margins.optimum, want) << n << "x" << m << " k=" << k;
      EXPECT_EQ(static_cast<int>(margins.cells.size()), want);
      EXPECT_TRUE(Verify(g, VertexSet::FromCells(g, margins.cells), k).valid());
      if (k >= 4) {
        const auto counts = SolveLayerCounts(n, m, k);
        ASSERT_EQ(counts.status, LayerSearchResult::Status::kOptimal);
        EXPECT_EQ(counts.optimum, want);
        EXPECT_TRUE(Verify(g, VertexSet::FromCells(g, counts.cells), k).valid());
      }
    }
  }
}

TEST(LayerSearchTest, CountsAndMarginsAgreeForLargeK) {
  for (int n = 3; n <= 7; ++n) {
    for (int m = n; m <= 9; ++m) {
      for (int k = 4; k <= 2 * n; ++k) {
        const auto counts = SolveLayerCounts(n, m, k);
        const auto margins = SolveLayerMargins(n, m, k);
        EXPECT_EQ(counts.optimum, margins.optimum) << n << "x" << m << " k=" << k;
      }
    }
  }
}

TEST(LayerSearchTest, StatusAndErrors) {
  EXPECT_EQ(SolveLayerCounts(3, 3, 7).status, LayerSearchResult::Status::kInfeasible);
  EXPECT_EQ(SolveLayerMargins(3, 3, 7).status, LayerSearchResult::Status::kInfeasible);
  LayerSearchOptions tiny;
  tiny.node_budget = 1;
  EXPECT_EQ(SolveLayerMargins(8, 9, 2, tiny).status,
            LayerSearchResult::Status::kBudgetExceeded);
  tiny.vector_cap = 3;
  tiny.node_budget = 1'000'000;
  EXPECT_EQ(SolveLayerCounts(8, 9, 7, tiny).status,
            LayerSearchResult::Status::kBudgetExceeded);
  EXPECT_THROW(SolveLayerCounts(5, 5, 3), Error);
  EXPECT_THROW(SolveLayerMargins(1, 5, 2), Error);
}

}  // namespace
}  // namespace wdimk
