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

#ifndef WDIMK_CONSTRUCTIONS_H_
#define WDIMK_CONSTRUCTIONS_H_

#include <optional>
#include <vector>

#include "wdimk/graph.h"
#include "wdimk/vertex_set.h"

namespace wdimk {

// Explicit weak k-resolving sets of K_n x K_n. Every function returns cells
// sorted row-major.

// D_i = {(i + j mod n, j) : 0 <= j < n}.
std::vector<Cell> ConstructDiagonal(int n, int i);

// Union of the diagonals D_t, ..., D_{n-1}, for 1 <= t <= n - 2. Weak
// (2n - 2t)-resolving with n - t members in every layer.
std::vector<Cell> ConstructXt(int n, int t);

// X_t without the cell (1, 2), for 0 <= t <= n - 3 (X_0 is the whole grid).
// Weak (2n - 2t - 1)-resolving.
std::vector<Cell> ConstructXtPrime(int n, int t);

// Weak 2-resolving set of size ceil(4n / 3) for n >= 6, built from blocks of
// four cells per three rows, extended for n mod 3 = 1, 2.
std::vector<Cell> ConstructYn(int n);

// Family name and parameter of the construction used as the upper-bound set
// for wdim_k(K_n x K_n).
struct SquareConstruction {
  enum class Family { kXt, kXtPrime, kYn, kAll };
  Family family = Family::kAll;
  int parameter = 0;
  std::vector<Cell> cells;
};

// The construction attaining wdim_k(K_n x K_n), when one exists: X_t for even
// 4 <= k <= 2n - 2, X'_t for odd k >= 5, X_{n-2} for k = 3, the whole grid for
// k = 2n, Y_n for k = 2 and n >= 6. Returns nullopt otherwise.
std::optional<SquareConstruction> ConstructionForSquare(int n, int k);

// Bipartite row/column incidence graph of a cell set: row i is joined to
// column j' iff (i, j) is in the set.
class LayerIncidenceGraph {
 public:
  LayerIncidenceGraph(int rows, int cols, std::vector<Cell> edges);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t edge_count() const { return edges_.size(); }
  const std::vector<Cell>& edges() const { return edges_; }

  int RowDegree(int i) const { return row_degree_[i]; }
  int ColDegree(int j) const { return col_degree_[j]; }

  int IsolatedVertexCount() const;
  // Sizes (vertex counts) of the connected components, sorted ascending.
  std::vector<int> ComponentSizes() const;
  bool HasComponentOfSize(int size) const;

 private:
  int rows_;
  int cols_;
  std::vector<Cell> edges_;
  std::vector<int> row_degree_;
  std::vector<int> col_degree_;
};

// Throws kGraphMismatch unless `y` belongs to `g`, and
// kNotTwoDimensionalHamming unless `g` is K_n x K_n.
LayerIncidenceGraph BuildLayerIncidenceGraph(const Graph& g,
                                             const VertexSet& y);

}  // namespace wdimk

#endif  // WDIMK_CONSTRUCTIONS_H_
