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

#include "wdimk/ilp_model.h"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "wdimk/error.h"
#include "wdimk/resolving.h"

namespace wdimk {
namespace {

struct Grid {
  int n;
  int m;

  int row(VertexId v) const { return v.index / m; }
  int col(VertexId v) const { return v.index % m; }
  int at(int i, int j) const { return i * m + j; }
};

Grid RequireTwoDimensional(const Graph& g) {
  if (!g.is_two_dimensional_hamming()) {
    throw Error(ErrorCode::kNotTwoDimensionalHamming, g.Describe());
  }
  return {g.rows(), g.cols()};
}

void RequireFeasibleK(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kOutOfRange, "k must be positive");
  std::vector<int> sorted = g.dims();
  std::sort(sorted.rbegin(), sorted.rend());
  const int kappa = KappaHammingFormula(sorted);
  if (k > kappa) {
    throw Error(ErrorCode::kKExceedsKappa,
                "k=" + std::to_string(k) + " exceeds kappa=" +
                    std::to_string(kappa) + " of " + g.Describe());
  }
}

IlpModel SelectionSkeleton(const Grid& grid, Formulation f, int k) {
  IlpModel model;
  model.meta = {f, {grid.n, grid.m}, k};
  for (int i = 0; i < grid.n; ++i) {
    for (int j = 0; j < grid.m; ++j) {
      const int var =
          model.AddVariable(SelectionVariableName(i, j), VarKind::kBinary);
      model.objective.push_back({var, 1});
    }
  }
  return model;
}

bool AlignedCells(const Grid& grid, int u, int v) {
  const bool same_row = u / grid.m == v / grid.m;
  const bool same_col = u % grid.m == v % grid.m;
  return same_row != same_col;
}

// Pairwise covering constraint of vertex pair (u, v) over s variables.
std::vector<Term> CoveringTerms(const Graph& g, int u, int v) {
  std::vector<Term> terms;
  for (int w = 0; w < g.vertex_count(); ++w) {
    const int a = CoefficientA(g, VertexId(u), VertexId(v), VertexId(w));
    if (a != 0) terms.push_back({w, a});
  }
  return terms;
}

}  // namespace

std::string_view FormulationName(Formulation f) {
  switch (f) {
    case Formulation::kFs: return "fs";
    case Formulation::kFsMinus: return "fs-";
    case Formulation::kFgh: return "fgh";
    case Formulation::kCustom: return "custom";
  }
  return "custom";
}

std::optional<Formulation> ParseFormulationName(std::string_view name) {
  if (name == "fs") return Formulation::kFs;
  if (name == "fs-" || name == "fs_minus") return Formulation::kFsMinus;
  if (name == "fgh") return Formulation::kFgh;
  if (name == "custom") return Formulation::kCustom;
  return std::nullopt;
}

int IlpModel::AddVariable(std::string name, VarKind kind,
                          std::optional<int> upper_bound) {
  variables.push_back({std::move(name), kind, upper_bound});
  return static_cast<int>(variables.size()) - 1;
}

void IlpModel::AddConstraint(std::vector<Term> terms, Sense sense, int rhs) {
  constraints.push_back({"c" + std::to_string(constraints.size() + 1),
                         std::move(terms), sense, rhs});
}

void IlpModel::Validate() const {
  const int count = static_cast<int>(variables.size());
  std::unordered_set<std::string> names;
  for (const Variable& v : variables) {
    if (!names.insert(v.name).second) {
      throw Error(ErrorCode::kUnsupportedModel,
                  "duplicate variable " + v.name);
    }
  }
  auto check_terms = [&](const std::vector<Term>& terms,
                         const std::string& where) {
    for (const Term& t : terms) {
      if (t.var < 0 || t.var >= count) {
        throw Error(ErrorCode::kUnsupportedModel,
                    where + " references an undeclared variable");
      }
    }
  };
  check_terms(objective, "objective");
  for (const LinearConstraint& c : constraints) check_terms(c.terms, c.name);
}

std::string SelectionVariableName(int i, int j) {
  return "s_" + std::to_string(i) + "_" + std::to_string(j);
}

std::optional<VertexId> VertexOfVariable(const IlpModel& model, int var) {
  if (var < 0 || var >= static_cast<int>(model.variables.size()) ||
      model.meta.dims.size() != 2) {
    return std::nullopt;
  }
  const std::string& name = model.variables[var].name;
  if (name.size() < 5 || name[0] != 's' || name[1] != '_') return std::nullopt;
  const char* p = name.data() + 2;
  const char* end = name.data() + name.size();
  int i = 0;
  int j = 0;
  auto r1 = std::from_chars(p, end, i);
  if (r1.ec != std::errc() || r1.ptr == end || *r1.ptr != '_') {
    return std::nullopt;
  }
  auto r2 = std::from_chars(r1.ptr + 1, end, j);
  if (r2.ec != std::errc() || r2.ptr != end) return std::nullopt;
  const int n = model.meta.dims[0];
  const int m = model.meta.dims[1];
  if (i < 0 || i >= n || j < 0 || j >= m) return std::nullopt;
  return VertexId(i * m + j);
}

int CoefficientA(const Graph& g, VertexId u, VertexId v, VertexId w) {
  const Grid grid = RequireTwoDimensional(g);
  if (!g.Contains(u) || !g.Contains(v) || !g.Contains(w)) {
    throw Error(ErrorCode::kIndexOutOfRange, "vertex outside graph");
  }
  if (!(u < v)) throw Error(ErrorCode::kBadOrder, "requires u < v");
  const bool uv_aligned = AlignedCells(grid, u.index, v.index);
  if (w == u || w == v) return uv_aligned ? 1 : 2;
  const bool wu = AlignedCells(grid, w.index, u.index);
  const bool wv = AlignedCells(grid, w.index, v.index);
  return wu != wv ? 1 : 0;
}

VertexSet IndexSetIuv(const Graph& g, VertexId u, VertexId v) {
  const Grid grid = RequireTwoDimensional(g);
  if (!g.Contains(u) || !g.Contains(v)) {
    throw Error(ErrorCode::kIndexOutOfRange, "vertex outside graph");
  }
  if (u == v) throw Error(ErrorCode::kSameVertex, "u == v");
  std::vector<VertexId> members;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == u.index || w == v.index) continue;
    if (AlignedCells(grid, w, u.index) != AlignedCells(grid, w, v.index)) {
      members.emplace_back(w);
    }
  }
  return VertexSet::Of(g, std::move(members));
}

IlpModel BuildFs(const Graph& g, int k) {
  const Grid grid = RequireTwoDimensional(g);
  RequireFeasibleK(g, k);
  IlpModel model = SelectionSkeleton(grid, Formulation::kFs, k);
  const int count = g.vertex_count();
  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      model.AddConstraint(CoveringTerms(g, u, v), Sense::kGreaterEqual, k);
    }
  }
  return model;
}

IlpModel BuildFsMinus(const Graph& g, int k) {
  const Grid grid = RequireTwoDimensional(g);
  if (k < 4) {
    throw Error(ErrorCode::kKTooSmallForReduction,
                "aligned-pair model needs k >= 4 (k=" + std::to_string(k) +
                    ")");
  }
  RequireFeasibleK(g, k);
  IlpModel model = SelectionSkeleton(grid, Formulation::kFsMinus, k);
  const int count = g.vertex_count();
  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      if (!AlignedCells(grid, u, v)) continue;
      model.AddConstraint(CoveringTerms(g, u, v), Sense::kGreaterEqual, k);
    }
  }
  return model;
}

IlpModel BuildFgh(const Graph& g, int k) {
  const Grid grid = RequireTwoDimensional(g);
  RequireFeasibleK(g, k);
  IlpModel model = SelectionSkeleton(grid, Formulation::kFgh, k);
  const int h0 = static_cast<int>(model.variables.size());
  for (int j = 0; j < grid.m; ++j) {
    model.AddVariable("h_" + std::to_string(j), VarKind::kInteger, grid.n);
  }
  const int g0 = static_cast<int>(model.variables.size());
  for (int i = 0; i < grid.n; ++i) {
    model.AddVariable("g_" + std::to_string(i), VarKind::kInteger, grid.m);
  }

  for (int j = 0; j < grid.m; ++j) {
    std::vector<Term> terms{{h0 + j, 1}};
    for (int i = 0; i < grid.n; ++i) terms.push_back({grid.at(i, j), -1});
    model.AddConstraint(std::move(terms), Sense::kEqual, 0);
  }
  for (int i = 0; i < grid.n; ++i) {
    std::vector<Term> terms{{g0 + i, 1}};
    for (int j = 0; j < grid.m; ++j) terms.push_back({grid.at(i, j), -1});
    model.AddConstraint(std::move(terms), Sense::kEqual, 0);
  }
  for (int j = 0; j < grid.m; ++j) {
    for (int jj = j + 1; jj < grid.m; ++jj) {
      model.AddConstraint({{h0 + j, 1}, {h0 + jj, 1}}, Sense::kGreaterEqual,
                          k);
    }
  }
  for (int i = 0; i < grid.n; ++i) {
    for (int ii = i + 1; ii < grid.n; ++ii) {
      model.AddConstraint({{g0 + i, 1}, {g0 + ii, 1}}, Sense::kGreaterEqual,
                          k);
    }
  }
  if (k <= 3) {
    const int count = g.vertex_count();
    for (int u = 0; u < count; ++u) {
      for (int v = u + 1; v < count; ++v) {
        if (AlignedCells(grid, u, v)) continue;
        const int iu = u / grid.m;
        const int ju = u % grid.m;
        const int iv = v / grid.m;
        const int jv = v % grid.m;
        model.AddConstraint({{h0 + ju, 1},
                             {h0 + jv, 1},
                             {g0 + iu, 1},
                             {g0 + iv, 1},
                             {grid.at(iu, jv), -2},
                             {grid.at(iv, ju), -2}},
                            Sense::kGreaterEqual, k);
      }
    }
  }
  return model;
}

}  // namespace wdimk
