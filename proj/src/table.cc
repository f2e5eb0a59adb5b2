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

#include "wdimk/table.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "wdimk/error.h"

namespace wdimk {
namespace {

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  return fields;
}

int ParseInt(const std::string& text, int line) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line) +
                                            ": expected an integer, got '" +
                                            text + "'");
  }
  return value;
}

void CheckRange(IntRange r, const char* what) {
  if (r.lo > r.hi) {
    throw Error(ErrorCode::kOutOfRange, std::string("empty ") + what + " range");
  }
}

}  // namespace

std::optional<int> ExpectedTable::Find(int k, int m) const {
  const auto it = values.find({k, m});
  if (it == values.end()) return std::nullopt;
  return it->second;
}

ExpectedTable ParseExpectedCsv(std::istream& in) {
  ExpectedTable table;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  std::set<int> seen_k;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = SplitCsv(line);
    if (!header_seen) {
      if (fields.empty() || fields[0] != "k") {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) +
                        ": header must start with 'k'");
      }
      for (size_t i = 1; i < fields.size(); ++i) {
        table.ms.push_back(ParseInt(fields[i], line_no));
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != table.ms.size() + 1) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(table.ms.size() + 1) + " fields");
    }
    const int k = ParseInt(fields[0], line_no);
    if (!seen_k.insert(k).second) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) +
                                              ": duplicate row k=" +
                                              std::to_string(k));
    }
    for (size_t i = 0; i < table.ms.size(); ++i) {
      if (fields[i + 1].empty() || fields[i + 1] == "-") continue;
      table.values[{k, table.ms[i]}] = ParseInt(fields[i + 1], line_no);
    }
  }
  if (!header_seen) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line_no + 1) + ": missing header");
  }
  return table;
}

ExpectedTable LoadExpectedCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return ParseExpectedCsv(in);
}

std::string_view TableCellStatusName(TableCell::Status status) {
  switch (status) {
    case TableCell::Status::kProved: return "proved";
    case TableCell::Status::kIncumbent: return "incumbent";
    case TableCell::Status::kSkipped: return "skipped";
  }
  return "unknown";
}

const TableCell* TableReport::Find(int k, int m) const {
  for (const TableCell& c : cells) {
    if (c.k == k && c.m == m) return &c;
  }
  return nullptr;
}

TableReport RunTable(int n, IntRange m_range, IntRange k_range,
                     ComputeMethod method, const ComputeOptions& options,
                     const ExpectedTable* expected) {
  CheckRange(m_range, "m");
  CheckRange(k_range, "k");
  TableReport report;
  report.n = n;
  report.m_range = m_range;
  report.k_range = k_range;
  for (int k = k_range.lo; k <= k_range.hi; ++k) {
    for (int m = m_range.lo; m <= m_range.hi; ++m) {
      TableCell cell;
      cell.k = k;
      cell.m = m;
      const Graph g = MakeHamming({n, m});
      const bool formula_only = method == ComputeMethod::kFormula;
      if (k < 1 || k > Kappa(g) || (formula_only && m != n)) {
        report.cells.push_back(cell);
        continue;
      }
      ComputeOutcome out;
      try {
        out = ComputeWdim(g, k, method, options);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBudgetExceeded) throw;
        report.cells.push_back(cell);
        continue;
      }
      cell.value = out.result.value;
      cell.method = std::string(WdimMethodName(out.result.method));
      cell.status = out.result.proved_optimal ? TableCell::Status::kProved
                                              : TableCell::Status::kIncumbent;
      if (expected && cell.status == TableCell::Status::kProved) {
        if (const auto want = expected->Find(k, m)) {
          ++report.compared;
          if (*want != cell.value) {
            report.mismatches.push_back({k, m, *want, cell.value});
          }
        }
      }
      report.cells.push_back(cell);
    }
  }
  return report;
}

void WriteTableCsv(std::ostream& out, const TableReport& report) {
  out << 'k';
  for (int m = report.m_range.lo; m <= report.m_range.hi; ++m) out << ',' << m;
  out << '\n';
  for (int k = report.k_range.lo; k <= report.k_range.hi; ++k) {
    out << k;
    for (int m = report.m_range.lo; m <= report.m_range.hi; ++m) {
      const TableCell* c = report.Find(k, m);
      out << ',';
      if (!c || c->status == TableCell::Status::kSkipped) {
        out << '-';
      } else {
        out << c->value;
        if (c->status == TableCell::Status::kIncumbent) out << '*';
      }
    }
    out << '\n';
  }
}

ConjectureReport RunConjectureAudit(int n, IntRange m_range, IntRange k_range,
                                    const ComputeOptions& options) {
  CheckRange(m_range, "m");
  CheckRange(k_range, "k");
  if (n < 3 || m_range.lo <= n || k_range.lo < 2 || k_range.hi > 2 * n) {
    throw Error(ErrorCode::kOutOfRange,
                "audit needs n >= 3, m > n and 2 <= k <= 2n");
  }
  ConjectureReport report;
  report.n = n;
  for (int m = m_range.lo; m <= m_range.hi; ++m) {
    for (int k = k_range.lo; k <= k_range.hi; ++k) {
      ConjectureCell cell;
      cell.m = m;
      cell.k = k;
      const int half = (k + 1) / 2;
      cell.predicted = k % 2 == 0 ? m * half : m * half - 1;
      cell.in_domain = k >= 3 || m >= 2 * n;
      const ComputeOutcome out =
          ComputeWdim(MakeHamming({n, m}), k, ComputeMethod::kIlpFgh, options);
      cell.optimum = out.result.value;
      cell.proved = out.result.proved_optimal;
      cell.agrees = cell.proved && cell.optimum == cell.predicted;
      if (!cell.proved) {
        ++report.unproved;
      } else if (cell.agrees) {
        ++report.agreements;
      } else if (cell.in_domain) {
        ++report.violations;
      } else {
        ++report.out_of_domain_deviations;
      }
      report.cells.push_back(cell);
    }
  }
  return report;
}

void WriteConjectureCsv(std::ostream& out, const ConjectureReport& report) {
  out << "n,m,k,optimum,predicted,in_domain,status\n";
  for (const ConjectureCell& c : report.cells) {
    const char* status = !c.proved       ? "incumbent"
                         : c.agrees      ? "agree"
                         : c.in_domain   ? "violation"
                                         : "deviation";
    out << report.n << ',' << c.m << ',' << c.k << ',' << c.optimum
        << (c.proved ? "" : "*") << ',' << c.predicted << ','
        << (c.in_domain ? 1 : 0) << ',' << status << '\n';
  }
}

}  // namespace wdimk
