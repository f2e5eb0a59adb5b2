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

#ifndef WDIMK_VERTEX_SET_H_
#define WDIMK_VERTEX_SET_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "wdimk/graph.h"

namespace wdimk {

// Coordinate pair (i, j) of K_n x K_m.
struct Cell {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

// Strictly increasing list of vertices tied to the graph it was built for.
class VertexSet {
 public:
  VertexSet() = default;

  static VertexSet Of(const Graph& g, std::vector<VertexId> members);
  static VertexSet FromIndices(const Graph& g, std::span<const int> indices);
  static VertexSet FromCells(const Graph& g, std::span<const Cell> cells);
  static VertexSet All(const Graph& g);

  std::span<const VertexId> members() const { return members_; }
  size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool Contains(VertexId v) const;

  uint64_t graph_fingerprint() const { return graph_fingerprint_; }
  // Throws kGraphMismatch unless the set was built for a graph with the
  // same structure as `g`.
  void CheckBelongsTo(const Graph& g) const;

  std::vector<Cell> ToCells(const Graph& g) const;
  std::vector<std::vector<int>> ToCoordinates(const Graph& g) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  uint64_t graph_fingerprint_ = 0;
  std::vector<VertexId> members_;
};

}  // namespace wdimk

#endif  // WDIMK_VERTEX_SET_H_
