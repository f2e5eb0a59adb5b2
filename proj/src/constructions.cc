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

#include "wdimk/constructions.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "wdimk/error.h"

namespace wdimk {
namespace {

void Normalize(std::vector<Cell>& cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

std::vector<Cell> UnionOfDiagonals(int n, int first) {
  std::vector<Cell> cells;
  for (int i = first; i < n; ++i) {
    for (const Cell& c : ConstructDiagonal(n, i)) cells.push_back(c);
  }
  Normalize(cells);
  return cells;
}

}  // namespace

std::vector<Cell> ConstructDiagonal(int n, int i) {
  if (n < 1 || i < 0 || i >= n) {
    throw Error(ErrorCode::kOutOfRange,
                "diagonal needs 0 <= i < n (n=" + std::to_string(n) +
                    ", i=" + std::to_string(i) + ")");
  }
  std::vector<Cell> cells;
  cells.reserve(n);
  for (int j = 0; j < n; ++j) cells.push_back({(i + j) % n, j});
  Normalize(cells);
  return cells;
}

std::vector<Cell> ConstructXt(int n, int t) {
  if (n < 3 || t < 1 || t > n - 2) {
    throw Error(ErrorCode::kOutOfRange,
                "X_t needs n >= 3 and 1 <= t <= n-2 (n=" + std::to_string(n) +
                    ", t=" + std::to_string(t) + ")");
  }
  return UnionOfDiagonals(n, t);
}

std::vector<Cell> ConstructXtPrime(int n, int t) {
  if (n < 3 || t < 0 || t > n - 3) {
    throw Error(ErrorCode::kOutOfRange,
                "X'_t needs n >= 3 and 0 <= t <= n-3 (n=" +
                    std::to_string(n) + ", t=" + std::to_string(t) + ")");
  }
  std::vector<Cell> cells = UnionOfDiagonals(n, t);
  const Cell removed{1, 2};
  auto it = std::lower_bound(cells.begin(), cells.end(), removed);
  if (it == cells.end() || *it != removed) {
    throw Error(ErrorCode::kInternalAssertion, "(1,2) is not in X_t");
  }
  cells.erase(it);
  return cells;
}

std::vector<Cell> ConstructYn(int n) {
  if (n < 6) {
    throw Error(ErrorCode::kOutOfRange,
                "Y_n is defined for n >= 6 (n=" + std::to_string(n) + ")");
  }
  std::vector<Cell> cells;
  const int s = n / 3;
  for (int r = 0; r < s; ++r) {
    const int b = 3 * r;
    cells.push_back({b, b});
    cells.push_back({b, b + 1});
    cells.push_back({b + 1, b + 2});
    cells.push_back({b + 2, b + 2});
  }
  switch (n % 3) {
    case 1:
      cells.push_back({n - 1, n - 2});
      cells.push_back({n - 1, n - 1});
      break;
    case 2:
      cells.push_back({n - 2, n - 2});
      cells.push_back({n - 2, n - 1});
      cells.push_back({n - 1, n - 1});
      break;
    default:
      break;
  }
  Normalize(cells);
  return cells;
}

std::optional<SquareConstruction> ConstructionForSquare(int n, int k) {
  using Family = SquareConstruction::Family;
  if (n < 3 || k < 1 || k > 2 * n) return std::nullopt;
  if (k == 2 * n) {
    std::vector<Cell> all;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) all.push_back({i, j});
    }
    return SquareConstruction{Family::kAll, 0, std::move(all)};
  }
  if (k >= 4 && k % 2 == 0) {
    const int t = n - k / 2;
    return SquareConstruction{Family::kXt, t, ConstructXt(n, t)};
  }
  if (k >= 5) {
    const int t = (2 * n - k - 1) / 2;
    return SquareConstruction{Family::kXtPrime, t, ConstructXtPrime(n, t)};
  }
  if (k == 3) {
    return SquareConstruction{Family::kXt, n - 2, ConstructXt(n, n - 2)};
  }
  if (k == 2 && n >= 6) {
    return SquareConstruction{Family::kYn, n, ConstructYn(n)};
  }
  return std::nullopt;
}

LayerIncidenceGraph::LayerIncidenceGraph(int rows, int cols,
                                         std::vector<Cell> edges)
    : rows_(rows),
      cols_(cols),
      edges_(std::move(edges)),
      row_degree_(rows, 0),
      col_degree_(cols, 0) {
  Normalize(edges_);
  for (const Cell& c : edges_) {
    if (c.row < 0 || c.row >= rows || c.col < 0 || c.col >= cols) {
      throw Error(ErrorCode::kIndexOutOfRange, "cell outside grid");
    }
    ++row_degree_[c.row];
    ++col_degree_[c.col];
  }
}

int LayerIncidenceGraph::IsolatedVertexCount() const {
  return static_cast<int>(
      std::count(row_degree_.begin(), row_degree_.end(), 0) +
      std::count(col_degree_.begin(), col_degree_.end(), 0));
}

std::vector<int> LayerIncidenceGraph::ComponentSizes() const {
  // Rows are vertices [0, rows), columns [rows, rows + cols).
  std::vector<int> parent(rows_ + cols_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Cell& c : edges_) {
    const int a = find(c.row);
    const int b = find(rows_ + c.col);
    if (a != b) parent[a] = b;
  }
  std::vector<int> size(rows_ + cols_, 0);
  for (int v = 0; v < rows_ + cols_; ++v) ++size[find(v)];
  std::vector<int> sizes;
  for (int s : size) {
    if (s > 0) sizes.push_back(s);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool LayerIncidenceGraph::HasComponentOfSize(int size) const {
  const auto sizes = ComponentSizes();
  return std::find(sizes.begin(), sizes.end(), size) != sizes.end();
}

LayerIncidenceGraph BuildLayerIncidenceGraph(const Graph& g,
                                             const VertexSet& y) {
  y.CheckBelongsTo(g);
  if (!g.is_two_dimensional_hamming() || g.rows() != g.cols()) {
    throw Error(ErrorCode::kNotTwoDimensionalHamming,
                "expected K_n x K_n, got " + g.Describe());
  }
  return LayerIncidenceGraph(g.rows(), g.cols(), y.ToCells(g));
}

}  // namespace wdimk
