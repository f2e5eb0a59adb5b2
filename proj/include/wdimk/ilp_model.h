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

#ifndef WDIMK_ILP_MODEL_H_
#define WDIMK_ILP_MODEL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wdimk/graph.h"
#include "wdimk/vertex_set.h"

namespace wdimk {

enum class VarKind { kBinary, kInteger };

struct Variable {
  std::string name;
  VarKind kind = VarKind::kBinary;
  // Redundant upper bound emitted for integer layer counts.
  std::optional<int> upper_bound;

  friend bool operator==(const Variable&, const Variable&) = default;
};

struct Term {
  int var = 0;
  int coef = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class Sense { kGreaterEqual, kEqual };

struct LinearConstraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::kGreaterEqual;
  int rhs = 0;

  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;
};

enum class Formulation { kFs, kFsMinus, kFgh, kCustom };

std::string_view FormulationName(Formulation f);
std::optional<Formulation> ParseFormulationName(std::string_view name);

struct ModelMeta {
  Formulation formulation = Formulation::kCustom;
  std::vector<int> dims;
  int k = 0;

  friend bool operator==(const ModelMeta&, const ModelMeta&) = default;
};

// Dialect-neutral minimization model with integer coefficients.
struct IlpModel {
  std::vector<Variable> variables;
  std::vector<Term> objective;
  std::vector<LinearConstraint> constraints;
  ModelMeta meta;

  int AddVariable(std::string name, VarKind kind,
                  std::optional<int> upper_bound = std::nullopt);
  // Appends a constraint named c<N> where N is its 1-based position.
  void AddConstraint(std::vector<Term> terms, Sense sense, int rhs);
  // Throws kUnsupportedModel on dangling variable references or duplicate
  // names.
  void Validate() const;

  friend bool operator==(const IlpModel&, const IlpModel&) = default;
};

// Name of the selection variable of vertex (i, j): "s_i_j".
std::string SelectionVariableName(int i, int j);

// Vertex selected by variable `var`, when it is an s_i_j variable of a model
// over K_n x K_m.
std::optional<VertexId> VertexOfVariable(const IlpModel& model, int var);

// |d(u, w) - d(v, w)| in K_n x K_m evaluated from alignment: 2 when u, v are
// not aligned and w is an endpoint, 1 when they are aligned and w is an
// endpoint, 1 when w is aligned with exactly one endpoint, else 0. Requires
// u < v.
int CoefficientA(const Graph& g, VertexId u, VertexId v, VertexId w);

// Vertices other than u and v aligned with exactly one of them.
VertexSet IndexSetIuv(const Graph& g, VertexId u, VertexId v);

// Full pairwise model: one covering constraint per unordered vertex pair.
IlpModel BuildFs(const Graph& g, int k);

// Aligned-pair constraints only; exact for k >= 4.
IlpModel BuildFsMinus(const Graph& g, int k);

// Layer-count model: s_u binaries, h_j / g_i integer layer counts with
// linkage equalities, pairwise layer constraints, and the non-aligned family
// for k <= 3.
IlpModel BuildFgh(const Graph& g, int k);

}  // namespace wdimk

#endif  // WDIMK_ILP_MODEL_H_
