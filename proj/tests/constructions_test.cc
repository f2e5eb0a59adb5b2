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

#include "wdimk/constructions.h"
#include "wdimk/error.h"
#include "wdimk/resolving.h"
#include "wdimk/wdim.h"

namespace wdimk {
namespace {

void ExpectCode(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
    FAIL() << "expected " << ErrorCodeName(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::vector<Cell> Sorted(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<Cell> Union(std::vector<Cell> a, const std::vector<Cell>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return Sorted(a);
}

TEST(DiagonalTest, Examples) {
  EXPECT_EQ(ConstructDiagonal(3, 0), (std::vector<Cell>{{0, 0}, {1, 1}, {2, 2}}));
  EXPECT_EQ(ConstructDiagonal(3, 2), (std::vector<Cell>{{0, 1}, {1, 2}, {2, 0}}));
  ExpectCode(ErrorCode::kOutOfRange, [] { ConstructDiagonal(3, 3); });
}

TEST(DiagonalTest, DiagonalsPartitionTheGrid) {
  for (int n = 2; n <= 9; ++n) {
    std::set<Cell> all;
    for (int i = 0; i < n; ++i) {
      const auto d = ConstructDiagonal(n, i);
      EXPECT_EQ(d.size(), static_cast<size_t>(n));
      for (const Cell& c : d) {
        EXPECT_EQ(((c.col + i) % n), c.row);
        EXPECT_TRUE(all.insert(c).second);
      }
    }
    EXPECT_EQ(all.size(), static_cast<size_t>(n * n));
  }
}

TEST(XtTest, SixBySixMembers) {
  // X_4 of K_6 x K_6: the two diagonals D_4 and D_5, 12 cells.
  const auto x4 = ConstructXt(6, 4);
  EXPECT_EQ(x4, Union(ConstructDiagonal(6, 4), ConstructDiagonal(6, 5)));
  EXPECT_EQ(x4.size(), 12u);
  EXPECT_EQ(ConstructXt(6, 1).size(), 30u);
  const Graph g = MakeHamming({6, 6});
  EXPECT_TRUE(Verify(g, VertexSet::FromCells(g, ConstructXt(6, 1)), 10).valid());
  EXPECT_TRUE(Verify(g, VertexSet::FromCells(g, ConstructXt(6, 2)), 8).valid());
  ExpectCode(ErrorCode::kOutOfRange, [] { ConstructXt(6, 0); });
  ExpectCode(ErrorCode::kOutOfRange, [] { ConstructXt(6, 5); });
}

TEST(XtTest, EveryLayerHoldsNMinusTCells) {
  for (int n = 3; n <= 10; ++n) {
    for (int t = 1; t <= n - 2; ++t) {
      std::vector<int> rows(n, 0), cols(n, 0);
      for (const Cell& c : ConstructXt(n, t)) {
        ++rows[c.row];
        ++cols[c.col];
      }
      for (int i = 0; i < n; ++i) {
        EXPECT_EQ(rows[i], n - t);
        EXPECT_EQ(cols[i], n - t);
      }
    }
  }
}

TEST(XtPrimeTest, Examples) {
  const Graph g5 = MakeHamming({5, 5});
  const auto a = ConstructXtPrime(5, 0);
  EXPECT_EQ(a.size(), 24u);
  EXPECT_TRUE(Verify(g5, VertexSet::FromCells(g5, a), 9).valid());
  const Graph g6 = MakeHamming({6, 6});
  const auto b = ConstructXtPrime(6, 0);
  EXPECT_EQ(b.size(), 35u);
  EXPECT_TRUE(Verify(g6, VertexSet::FromCells(g6, b), 11).valid());
  const Graph g4 = MakeHamming({4, 4});
  const auto c = ConstructXtPrime(4, 1);
  EXPECT_EQ(c.size(), 11u);
  EXPECT_TRUE(Verify(g4, VertexSet::FromCells(g4, c), 5).valid());
  EXPECT_FALSE(std::binary_search(c.begin(), c.end(), Cell{1, 2}));
  ExpectCode(ErrorCode::kOutOfRange, [] { ConstructXtPrime(5, 3); });
}

TEST(YnTest, SmallMembersAndRecursion) {
  const std::vector<Cell> y6 = {{0, 0}, {0, 1}, {1, 2}, {2, 2},
                                {3, 3}, {3, 4}, {4, 5}, {5, 5}};
  EXPECT_EQ(ConstructYn(6), y6);
  EXPECT_EQ(ConstructYn(7), Union(y6, {{6, 5}, {6, 6}}));
  EXPECT_EQ(ConstructYn(8), Union(y6, {{6, 6}, {6, 7}, {7, 7}}));
  EXPECT_EQ(ConstructYn(7).size(), 10u);
  EXPECT_EQ(ConstructYn(8).size(), 11u);
  ExpectCode(ErrorCode::kOutOfRange, [] { ConstructYn(5); });
}

// Every construction verifies at its k with the size the theorem gives.
TEST(ConstructionCertificateTest, AllFamilies) {
  for (int n = 3; n <= 12; ++n) {
    const Graph g = MakeHamming({n, n});
    for (int t = 1; t <= n - 2; ++t) {
      const int k = 2 * n - 2 * t;
      const auto cells = ConstructXt(n, t);
      EXPECT_EQ(static_cast<int>(cells.size()), n * k / 2);
      EXPECT_TRUE(Verify(g, VertexSet::FromCells(g, cells), k).valid());
    }
    for (int t = 0; t <= n - 3; ++t) {
      const int k = 2 * n - 2 * t - 1;
      const auto cells = ConstructXtPrime(n, t);
      EXPECT_EQ(static_cast<int>(cells.size()), n * ((k + 1) / 2) - 1);
      EXPECT_TRUE(Verify(g, VertexSet::FromCells(g, cells), k).valid());
    }
  }
  for (int n = 6; n <= 15; ++n) {
    const Graph g = MakeHamming({n, n});
    const auto cells = ConstructYn(n);
    EXPECT_EQ(static_cast<int>(cells.size()), (4 * n + 2) / 3);
    EXPECT_TRUE(Verify(g, VertexSet::FromCells(g, cells), 2).valid());
  }
}

TEST(ConstructionForSquareTest, SizesMatchTheFormula) {
  for (int n = 3; n <= 12; ++n) {
    const Graph g = MakeHamming({n, n});
    for (int k = 2; k <= 2 * n; ++k) {
      const auto c = ConstructionForSquare(n, k);
      if (k == 2 && n < 6) {
        EXPECT_FALSE(c.has_value());
        continue;
      }
      ASSERT_TRUE(c.has_value()) << n << " " << k;
      EXPECT_EQ(static_cast<int>(c->cells.size()), WdimFormulaSquare(n, k));
      EXPECT_TRUE(Verify(g, VertexSet::FromCells(g, c->cells), k).valid());
    }
  }
  EXPECT_EQ(ConstructionForSquare(6, 3)->family,
            SquareConstruction::Family::kXt);
  EXPECT_EQ(ConstructionForSquare(6, 12)->family,
            SquareConstruction::Family::kAll);
}

TEST(LayerIncidenceGraphTest, Examples) {
  const Graph g = MakeHamming({6, 6});
  const auto y6 = BuildLayerIncidenceGraph(g, VertexSet::FromCells(g, ConstructYn(6)));
  EXPECT_EQ(y6.edge_count(), 8u);
  EXPECT_EQ(y6.IsolatedVertexCount(), 0);

  const auto empty = BuildLayerIncidenceGraph(g, VertexSet::Of(g, {}));
  EXPECT_EQ(empty.edge_count(), 0u);
  EXPECT_EQ(empty.IsolatedVertexCount(), 12);

  const auto one = BuildLayerIncidenceGraph(g, VertexSet::Of(g, {VertexId(0)}));
  EXPECT_EQ(one.edge_count(), 1u);
  EXPECT_EQ(one.RowDegree(0), 1);
  EXPECT_EQ(one.ColDegree(0), 1);
  EXPECT_TRUE(one.HasComponentOfSize(2));
  EXPECT_EQ(one.IsolatedVertexCount(), 10);

  const Graph other = MakeHamming({5, 5});
  ExpectCode(ErrorCode::kGraphMismatch, [&] {
    BuildLayerIncidenceGraph(g, VertexSet::All(other));
  });
  const Graph rect = MakeHamming({5, 6});
  ExpectCode(ErrorCode::kNotTwoDimensionalHamming, [&] {
    BuildLayerIncidenceGraph(rect, VertexSet::All(rect));
  });
}

// Structural claims on weak-2 bases: no isolated layer vertex and no
// two-vertex component, checked on the solver's bases for n = 6, 7, 8.
TEST(LayerIncidenceGraphTest, WeakTwoBasesHaveNoSmallComponents) {
  for (int n = 6; n <= 8; ++n) {
    const Graph g = MakeHamming({n, n});
    for (ComputeMethod method : {ComputeMethod::kIlpFgh}) {
      const ComputeOutcome out = ComputeWdim(g, 2, method);
      ASSERT_TRUE(out.result.witness.has_value());
      EXPECT_EQ(out.result.value, (4 * n + 2) / 3);
      const auto gy = BuildLayerIncidenceGraph(g, *out.result.witness);
      EXPECT_EQ(gy.IsolatedVertexCount(), 0) << n;
      EXPECT_FALSE(gy.HasComponentOfSize(2)) << n;
    }
    const auto yn = BuildLayerIncidenceGraph(g, VertexSet::FromCells(g, ConstructYn(n)));
    EXPECT_EQ(yn.IsolatedVertexCount(), 0);
    EXPECT_FALSE(yn.HasComponentOfSize(2));
  }
}

}  // namespace
}  // namespace wdimk
