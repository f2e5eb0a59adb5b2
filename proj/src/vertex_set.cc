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

#include "wdimk/vertex_set.h"

#include <algorithm>
#include <string>

#include "wdimk/error.h"

namespace wdimk {

VertexSet VertexSet::Of(const Graph& g, std::vector<VertexId> members) {
  for (VertexId v : members) {
    if (!g.Contains(v)) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "vertex " + std::to_string(v.index) + " not in " +
                      g.Describe());
    }
  }
  std::sort(members.begin(), members.end());
  if (auto dup = std::adjacent_find(members.begin(), members.end());
      dup != members.end()) {
    throw Error(ErrorCode::kDuplicateVertex,
                "vertex " + std::to_string(dup->index) + " listed twice");
  }
  VertexSet set;
  set.graph_fingerprint_ = g.fingerprint();
  set.members_ = std::move(members);
  return set;
}

VertexSet VertexSet::FromIndices(const Graph& g, std::span<const int> indices) {
  std::vector<VertexId> members;
  members.reserve(indices.size());
  for (int i : indices) members.emplace_back(i);
  return Of(g, std::move(members));
}

VertexSet VertexSet::FromCells(const Graph& g, std::span<const Cell> cells) {
  if (!g.is_two_dimensional_hamming()) {
    throw Error(ErrorCode::kNotTwoDimensionalHamming, g.Describe());
  }
  std::vector<VertexId> members;
  members.reserve(cells.size());
  for (const Cell& c : cells) members.push_back(g.VertexAt(c.row, c.col));
  return Of(g, std::move(members));
}

VertexSet VertexSet::All(const Graph& g) {
  std::vector<VertexId> members(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) members[v] = VertexId(v);
  return Of(g, std::move(members));
}

bool VertexSet::Contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::CheckBelongsTo(const Graph& g) const {
  if (graph_fingerprint_ != g.fingerprint()) {
    throw Error(ErrorCode::kGraphMismatch,
                "vertex set was not built for " + g.Describe());
  }
}

std::vector<Cell> VertexSet::ToCells(const Graph& g) const {
  CheckBelongsTo(g);
  if (!g.is_two_dimensional_hamming()) {
    throw Error(ErrorCode::kNotTwoDimensionalHamming, g.Describe());
  }
  std::vector<Cell> cells;
  cells.reserve(members_.size());
  for (VertexId v : members_) {
    cells.push_back({v.index / g.cols(), v.index % g.cols()});
  }
  return cells;
}

std::vector<std::vector<int>> VertexSet::ToCoordinates(const Graph& g) const {
  CheckBelongsTo(g);
  std::vector<std::vector<int>> out;
  out.reserve(members_.size());
  for (VertexId v : members_) {
    if (g.has_coordinates()) {
      out.push_back(g.Coordinates(v));
    } else {
      out.push_back({v.index});
    }
  }
  return out;
}

}  // namespace wdimk
