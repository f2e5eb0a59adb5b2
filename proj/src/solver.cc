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

#include "wdimk/solver.h"

#include <algorithm>
#include <iostream>
#include <map>
#include <numeric>
#include <unordered_map>

#include "wdimk/error.h"
#include "wdimk/graph.h"
#include "wdimk/layer_search.h"
#include "wdimk/resolving.h"

namespace wdimk {
namespace {

using Status = SolveResult::Status;

// A >= row over binary indices.
struct Row {
  std::vector<Term> terms;
  int rhs = 0;
};

// x = sign * (rhs - sum(coef * var)) over model variables.
struct Definition {
  int var = 0;
  int sign = 1;
  int rhs = 0;
  std::vector<Term> terms;
};

struct Presolved {
  std::vector<int> binary_of_var;  // -1 for integer variables
  std::vector<int> var_of_binary;
  std::vector<Definition> definitions;
  std::vector<Row> rows;
  bool infeasible = false;
};

[[noreturn]] void Unsupported(const std::string& what) {
  throw Error(ErrorCode::kUnsupportedModel, what);
}

// Rewrites terms over binaries only: returns coefficient per binary index and
// a constant that is moved to the right-hand side.
std::map<int, int> Expand(const Presolved& p,
                          const std::vector<int>& definition_of_var,
                          const std::vector<Term>& terms, int& constant) {
  std::map<int, int> out;
  for (const Term& t : terms) {
    const int b = p.binary_of_var[t.var];
    if (b >= 0) {
      out[b] += t.coef;
      continue;
    }
    const int d = definition_of_var[t.var];
    if (d < 0) Unsupported("integer variable without defining equality");
    const Definition& def = p.definitions[d];
    constant += t.coef * def.sign * def.rhs;
    for (const Term& s : def.terms) {
      out[p.binary_of_var[s.var]] -= t.coef * def.sign * s.coef;
    }
  }
  return out;
}

void AddRow(Presolved& p, const std::map<int, int>& coefs, int rhs) {
  Row row;
  row.rhs = rhs;
  int max_activity = 0;
  int min_activity = 0;
  for (const auto& [b, c] : coefs) {
    if (c == 0) continue;
    row.terms.push_back({b, c});
    (c > 0 ? max_activity : min_activity) += c;
  }
  if (min_activity >= rhs) return;
  if (max_activity < rhs) p.infeasible = true;
  p.rows.push_back(std::move(row));
}

Presolved Presolve(const IlpModel& model) {
  model.Validate();
  Presolved p;
  const int nv = static_cast<int>(model.variables.size());
  p.binary_of_var.assign(nv, -1);
  for (int v = 0; v < nv; ++v) {
    if (model.variables[v].kind == VarKind::kBinary) {
      p.binary_of_var[v] = static_cast<int>(p.var_of_binary.size());
      p.var_of_binary.push_back(v);
    }
  }
  std::vector<int> definition_of_var(nv, -1);
  std::vector<uint8_t> used(model.constraints.size(), 0);
  for (size_t c = 0; c < model.constraints.size(); ++c) {
    const LinearConstraint& lc = model.constraints[c];
    if (lc.sense != Sense::kEqual) continue;
    int integer_term = -1;
    int integer_count = 0;
    for (size_t t = 0; t < lc.terms.size(); ++t) {
      if (p.binary_of_var[lc.terms[t].var] < 0) {
        ++integer_count;
        integer_term = static_cast<int>(t);
      }
    }
    if (integer_count != 1) continue;
    const Term x = lc.terms[integer_term];
    if ((x.coef != 1 && x.coef != -1) || definition_of_var[x.var] >= 0) {
      continue;
    }
    Definition def;
    def.var = x.var;
    def.sign = x.coef;
    def.rhs = lc.rhs;
    for (size_t t = 0; t < lc.terms.size(); ++t) {
      if (static_cast<int>(t) != integer_term) def.terms.push_back(lc.terms[t]);
    }
    definition_of_var[x.var] = static_cast<int>(p.definitions.size());
    p.definitions.push_back(std::move(def));
    used[c] = 1;
  }
  for (int v = 0; v < nv; ++v) {
    if (p.binary_of_var[v] < 0 && definition_of_var[v] < 0) {
      Unsupported("integer variable " + model.variables[v].name +
                  " has no defining equality");
    }
  }
  for (size_t c = 0; c < model.constraints.size(); ++c) {
    if (used[c]) continue;
    const LinearConstraint& lc = model.constraints[c];
    int constant = 0;
    auto coefs = Expand(p, definition_of_var, lc.terms, constant);
    AddRow(p, coefs, lc.rhs - constant);
    if (lc.sense == Sense::kEqual) {
      std::map<int, int> negated;
      for (const auto& [b, a] : coefs) negated[b] = -a;
      AddRow(p, negated, constant - lc.rhs);
    }
  }
  // Integer bounds become rows: x >= 0 and x <= ub.
  for (const Definition& def : p.definitions) {
    int constant = 0;
    auto coefs = Expand(p, definition_of_var, {{def.var, 1}}, constant);
    AddRow(p, coefs, -constant);
    if (const auto ub = model.variables[def.var].upper_bound) {
      std::map<int, int> negated;
      for (const auto& [b, a] : coefs) negated[b] = -a;
      AddRow(p, negated, constant - *ub);
    }
  }
  int constant = 0;
  const auto objective =
      Expand(p, definition_of_var, model.objective, constant);
  if (constant != 0) Unsupported("objective has a constant term");
  int unit = 0;
  for (const auto& [b, a] : objective) {
    if (a != 1 && a != 0) Unsupported("objective is not unit-cost");
    unit += a;
  }
  if (unit != static_cast<int>(p.var_of_binary.size())) {
    Unsupported("objective must count every binary variable");
  }
  return p;
}

class BranchAndBound {
 public:
  BranchAndBound(const Presolved& p, int64_t node_budget, bool verbose)
      : rows_(p.rows),
        nb_(static_cast<int>(p.var_of_binary.size())),
        node_budget_(node_budget),
        verbose_(verbose) {
    occ_.resize(nb_);
    const int nr = static_cast<int>(rows_.size());
    residual_.resize(nr);
    pos_free_.assign(nr, 0);
    max_abs_.assign(nr, 0);
    max_pos_.assign(nr, 1);
    for (int r = 0; r < nr; ++r) {
      residual_[r] = rows_[r].rhs;
      for (const Term& t : rows_[r].terms) {
        occ_[t.var].push_back({r, t.coef});
        if (t.coef > 0) {
          pos_free_[r] += t.coef;
          max_pos_[r] = std::max(max_pos_[r], t.coef);
        }
        max_abs_[r] = std::max(max_abs_[r], std::abs(t.coef));
      }
    }
    order_.resize(nb_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return occ_[a].size() > occ_[b].size();
    });
    value_.assign(nb_, -1);
    stamp_.assign(nb_, 0);
    best_ = nb_ + 1;
  }

  // Accepts x when it satisfies every row.
  bool OfferIncumbent(const std::vector<uint8_t>& x) {
    for (const Row& row : rows_) {
      int activity = 0;
      for (const Term& t : row.terms) activity += t.coef * x[t.var];
      if (activity < row.rhs) return false;
    }
    const int ones = static_cast<int>(std::count(x.begin(), x.end(), 1));
    if (ones < best_) {
      best_ = ones;
      best_x_ = x;
    }
    return true;
  }

  void Run() {
    bool ok = true;
    for (int r = 0; r < static_cast<int>(rows_.size()) && ok; ++r) {
      ok = CheckRow(r);
    }
    if (ok && Propagate(0)) Search();
  }

  bool exhausted() const { return exhausted_; }
  int64_t nodes() const { return nodes_; }
  bool has_incumbent() const { return !best_x_.empty(); }
  const std::vector<uint8_t>& incumbent() const { return best_x_; }

 private:
  struct Occurrence {
    int row;
    int coef;
  };

  void Assign(int v, int val) {
    value_[v] = static_cast<int8_t>(val);
    trail_.push_back(v);
    ones_ += val;
    for (const Occurrence& o : occ_[v]) {
      if (o.coef > 0) pos_free_[o.row] -= o.coef;
      if (val) residual_[o.row] -= o.coef;
    }
  }

  void UndoTo(size_t mark) {
    while (trail_.size() > mark) {
      const int v = trail_.back();
      trail_.pop_back();
      const int val = value_[v];
      for (const Occurrence& o : occ_[v]) {
        if (o.coef > 0) pos_free_[o.row] += o.coef;
        if (val) residual_[o.row] += o.coef;
      }
      ones_ -= val;
      value_[v] = -1;
    }
  }

  // Fixes free variables the row cannot do without. False on conflict.
  bool CheckRow(int r) {
    const int slack = pos_free_[r] - residual_[r];
    if (slack < 0) return false;
    if (max_abs_[r] <= slack) return true;
    for (const Term& t : rows_[r].terms) {
      if (value_[t.var] >= 0 || std::abs(t.coef) <= slack) continue;
      Assign(t.var, t.coef > 0 ? 1 : 0);
    }
    return true;
  }

  bool Propagate(size_t from) {
    for (size_t q = from; q < trail_.size(); ++q) {
      const int v = trail_[q];
      for (const Occurrence& o : occ_[v]) {
        if (!CheckRow(o.row)) return false;
      }
    }
    return true;
  }

  // Sum of ceil(residual / max coefficient) over rows with disjoint free
  // positive supports, taken greedily by decreasing need. -1 if satisfied.
  int Bound() {
    needy_.clear();
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      if (residual_[r] > 0) {
        needy_.push_back({(residual_[r] + max_pos_[r] - 1) / max_pos_[r], r});
      }
    }
    if (needy_.empty()) return -1;
    std::sort(needy_.begin(), needy_.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    ++epoch_;
    int total = 0;
    for (const auto& [need, r] : needy_) {
      bool disjoint = true;
      for (const Term& t : rows_[r].terms) {
        if (t.coef > 0 && value_[t.var] < 0 && stamp_[t.var] == epoch_) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      for (const Term& t : rows_[r].terms) {
        if (t.coef > 0 && value_[t.var] < 0) stamp_[t.var] = epoch_;
      }
      total += need;
      if (ones_ + total >= best_) break;
    }
    return total;
  }

  int PickBranchVariable() const {
    for (int v : order_) {
      if (value_[v] >= 0) continue;
      for (const Occurrence& o : occ_[v]) {
        if (o.coef > 0 && residual_[o.row] > 0) return v;
      }
    }
    return -1;
  }

  void Search() {
    if (exhausted_) return;
    if (++nodes_ > node_budget_) {
      exhausted_ = true;
      return;
    }
    const int extra = Bound();
    if (extra < 0) {
      if (ones_ < best_) {
        best_ = ones_;
        best_x_.assign(nb_, 0);
        for (int v = 0; v < nb_; ++v) best_x_[v] = value_[v] == 1;
        if (verbose_) {
          std::cerr << "{\"event\":\"incumbent\",\"value\":" << best_
                    << ",\"nodes\":" << nodes_ << "}\n";
        }
      }
      return;
    }
    if (ones_ + extra >= best_) return;
    const int v = PickBranchVariable();
    if (v < 0) return;
    for (int val : {1, 0}) {
      const size_t mark = trail_.size();
      Assign(v, val);
      if (Propagate(mark)) Search();
      UndoTo(mark);
      if (exhausted_) return;
    }
  }

  const std::vector<Row>& rows_;
  const int nb_;
  const int64_t node_budget_;
  const bool verbose_;
  std::vector<std::vector<Occurrence>> occ_;
  std::vector<int> residual_;
  std::vector<int> pos_free_;
  std::vector<int> max_abs_;
  std::vector<int> max_pos_;
  std::vector<int> order_;
  std::vector<int8_t> value_;
  std::vector<int> trail_;
  std::vector<std::pair<int, int>> needy_;
  std::vector<uint32_t> stamp_;
  uint32_t epoch_ = 0;
  int ones_ = 0;
  int best_ = 0;
  std::vector<uint8_t> best_x_;
  int64_t nodes_ = 0;
  bool exhausted_ = false;
};

std::vector<int> FullAssignment(const IlpModel& model, const Presolved& p,
                                const std::vector<uint8_t>& binaries) {
  std::vector<int> values(model.variables.size(), 0);
  for (size_t b = 0; b < binaries.size(); ++b) {
    values[p.var_of_binary[b]] = binaries[b];
  }
  for (const Definition& def : p.definitions) {
    int sum = 0;
    for (const Term& t : def.terms) sum += t.coef * values[t.var];
    values[def.var] = def.sign * (def.rhs - sum);
  }
  return values;
}

// Binary vector over presolved indices for a set of selected vertices.
std::optional<std::vector<uint8_t>> BinariesOf(
    const IlpModel& model, const Presolved& p,
    const std::vector<VertexId>& vertices) {
  std::vector<uint8_t> x(p.var_of_binary.size(), 0);
  size_t matched = 0;
  for (size_t b = 0; b < x.size(); ++b) {
    const auto v = VertexOfVariable(model, p.var_of_binary[b]);
    if (v && std::binary_search(vertices.begin(), vertices.end(), *v)) {
      x[b] = 1;
      ++matched;
    }
  }
  if (matched != vertices.size()) return std::nullopt;
  return x;
}

bool IsStandardFgh(const IlpModel& model) {
  if (model.meta.formulation != Formulation::kFgh ||
      model.meta.dims.size() != 2) {
    return false;
  }
  try {
    return model == BuildFgh(MakeHamming(model.meta.dims), model.meta.k);
  } catch (const Error&) {
    return false;
  }
}

std::vector<VertexId> VerticesOfCells(const std::vector<Cell>& cells, int m) {
  std::vector<VertexId> out;
  for (const Cell& c : cells) out.emplace_back(c.row * m + c.col);
  std::sort(out.begin(), out.end());
  return out;
}

void Finish(const IlpModel& model, const Presolved& p,
            const std::vector<uint8_t>& binaries, SolveResult& result) {
  result.values = FullAssignment(model, p, binaries);
  result.optimum = static_cast<int>(
      std::count(binaries.begin(), binaries.end(), 1));
  result.witness.clear();
  for (size_t b = 0; b < binaries.size(); ++b) {
    if (!binaries[b]) continue;
    if (const auto v = VertexOfVariable(model, p.var_of_binary[b])) {
      result.witness.push_back(*v);
    }
  }
  std::sort(result.witness.begin(), result.witness.end());
  if (!SatisfiesModel(model, result.values)) {
    throw Error(ErrorCode::kInternalAssertion,
                "solver returned an assignment violating the model");
  }
  const auto& dims = model.meta.dims;
  if (model.meta.formulation != Formulation::kCustom && dims.size() == 2) {
    const Graph g = MakeHamming(dims);
    const Certificate cert =
        Verify(g, VertexSet::Of(g, result.witness), model.meta.k);
    if (!cert.valid()) {
      throw Error(ErrorCode::kInternalAssertion,
                  "solver witness is not weak k-resolving");
    }
  }
}

void Report(bool verbose, const SolveResult& r) {
  if (!verbose) return;
  std::cerr << "{\"event\":\"done\",\"method\":\"" << r.method
            << "\",\"optimum\":" << r.optimum
            << ",\"proved\":" << (r.proved_optimal ? "true" : "false")
            << ",\"nodes\":" << r.nodes << "}\n";
}

}  // namespace

bool SatisfiesModel(const IlpModel& model, const std::vector<int>& values) {
  if (values.size() != model.variables.size()) return false;
  for (size_t v = 0; v < values.size(); ++v) {
    const Variable& var = model.variables[v];
    if (values[v] < 0) return false;
    if (var.kind == VarKind::kBinary && values[v] > 1) return false;
    if (var.upper_bound && values[v] > *var.upper_bound) return false;
  }
  for (const LinearConstraint& c : model.constraints) {
    long activity = 0;
    for (const Term& t : c.terms) activity += long{t.coef} * values[t.var];
    if (c.sense == Sense::kEqual ? activity != c.rhs : activity < c.rhs) {
      return false;
    }
  }
  return true;
}

SolveResult Solve(const IlpModel& model, const SolveOptions& options) {
  const Presolved p = Presolve(model);
  SolveResult result;
  if (p.infeasible) {
    result.method = "presolve";
    Report(options.verbose, result);
    return result;
  }
  std::optional<std::vector<uint8_t>> start;
  if (options.hint) {
    std::vector<VertexId> hint = *options.hint;
    std::sort(hint.begin(), hint.end());
    start = BinariesOf(model, p, hint);
  }

  if (options.use_structure && IsStandardFgh(model)) {
    const int n = model.meta.dims[0];
    const int m = model.meta.dims[1];
    const int k = model.meta.k;
    LayerSearchOptions lo;
    lo.node_budget = options.node_budget;
    lo.vector_cap = options.vector_cap;
    lo.verbose = options.verbose;
    const LayerSearchResult lr =
        k >= 4 ? SolveLayerCounts(n, m, k, lo) : SolveLayerMargins(n, m, k, lo);
    result.nodes = lr.nodes;
    result.method = k >= 4 ? "fgh-counts" : "fgh-margins";
    if (lr.status == LayerSearchResult::Status::kOptimal) {
      const auto x = BinariesOf(model, p, VerticesOfCells(lr.cells, m));
      if (!x) throw Error(ErrorCode::kInternalAssertion, "unmapped witness");
      Finish(model, p, *x, result);
      result.status = Status::kOptimal;
      result.proved_optimal = true;
      Report(options.verbose, result);
      return result;
    }
    if (lr.status == LayerSearchResult::Status::kInfeasible) {
      Report(options.verbose, result);
      return result;
    }
    // Over budget: a k >= 4 basis is weak k-resolving for smaller k too.
    if (k < 4 && !start) {
      const LayerSearchResult upper = SolveLayerCounts(n, m, 4, lo);
      if (upper.status == LayerSearchResult::Status::kOptimal) {
        start = BinariesOf(model, p, VerticesOfCells(upper.cells, m));
      }
    }
  }

  BranchAndBound bb(p, options.node_budget, options.verbose);
  if (start) bb.OfferIncumbent(*start);
  bb.Run();
  result.nodes += bb.nodes();
  result.method = result.method.empty()
                      ? "branch-and-bound"
                      : result.method + "+branch-and-bound";
  if (bb.has_incumbent()) {
    Finish(model, p, bb.incumbent(), result);
  }
  if (bb.exhausted()) {
    result.status = Status::kBudgetExceeded;
  } else if (bb.has_incumbent()) {
    result.status = Status::kOptimal;
    result.proved_optimal = true;
  }
  Report(options.verbose, result);
  return result;
}

}  // namespace wdimk
