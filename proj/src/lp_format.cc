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

#include "wdimk/lp_format.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "wdimk/error.h"

namespace wdimk {
namespace {

void WriteExpression(const IlpModel& model, const std::vector<Term>& terms,
                     std::ostream& out) {
  bool first = true;
  for (const Term& t : terms) {
    const std::string& name = model.variables[t.var].name;
    const int magnitude = t.coef < 0 ? -t.coef : t.coef;
    if (first) {
      if (t.coef < 0) out << "- ";
    } else {
      out << (t.coef < 0 ? " - " : " + ");
    }
    if (magnitude != 1) out << magnitude << ' ';
    out << name;
    first = false;
  }
  if (first) out << "0";
}

enum class Section { kPreamble, kObjective, kConstraints, kBounds, kBinaries,
                     kGenerals, kEnd };

std::string Lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

std::optional<Section> SectionKeyword(std::string_view line) {
  const std::string key = Lower(Trim(line));
  if (key == "minimize" || key == "minimum" || key == "min") {
    return Section::kObjective;
  }
  if (key == "subject to" || key == "such that" || key == "st" ||
      key == "s.t.") {
    return Section::kConstraints;
  }
  if (key == "bounds" || key == "bound") return Section::kBounds;
  if (key == "binaries" || key == "binary" || key == "bin") {
    return Section::kBinaries;
  }
  if (key == "generals" || key == "general" || key == "gen") {
    return Section::kGenerals;
  }
  if (key == "end") return Section::kEnd;
  return std::nullopt;
}

struct Token {
  enum class Kind { kNumber, kName, kPlus, kMinus, kColon, kSense };
  Kind kind;
  std::string text;
};

class LpReader {
 public:
  IlpModel Read(std::istream& in) {
    std::string line;
    Section section = Section::kPreamble;
    while (std::getline(in, line)) {
      ++line_number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const std::string_view trimmed = Trim(line);
      if (trimmed.empty()) continue;
      if (trimmed.front() == '\\') {
        ReadComment(trimmed.substr(1));
        continue;
      }
      if (section == Section::kEnd) Fail("content after End");
      if (auto next = SectionKeyword(trimmed)) {
        section = *next;
        continue;
      }
      switch (section) {
        case Section::kPreamble:
          Fail("expected Minimize");
        case Section::kObjective:
          ReadObjective(trimmed);
          break;
        case Section::kConstraints:
          ReadConstraint(trimmed);
          break;
        case Section::kBounds:
          ReadBound(trimmed);
          break;
        case Section::kBinaries:
        case Section::kGenerals:
          ReadKinds(trimmed, section == Section::kBinaries ? VarKind::kBinary
                                                           : VarKind::kInteger);
          break;
        case Section::kEnd:
          break;
      }
    }
    if (section != Section::kEnd) {
      ++line_number_;
      Fail("missing End");
    }
    for (size_t v = 0; v < model_.variables.size(); ++v) {
      if (!kind_declared_[v]) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(first_line_[v]) + ": variable " +
                        model_.variables[v].name +
                        " is neither binary nor general");
      }
    }
    return std::move(model_);
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line_number_) + ": " + what);
  }

  int ParseInt(std::string_view text) const {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                     value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      Fail("expected an integer, got '" + std::string(text) + "'");
    }
    return value;
  }

  void ReadComment(std::string_view body) {
    std::istringstream fields{std::string(body)};
    std::string key;
    if (!(fields >> key)) return;
    if (key == "formulation") {
      std::string name;
      fields >> name;
      auto f = ParseFormulationName(name);
      if (!f) Fail("unknown formulation '" + name + "'");
      model_.meta.formulation = *f;
    } else if (key == "dims") {
      model_.meta.dims.clear();
      std::string d;
      while (fields >> d) model_.meta.dims.push_back(ParseInt(d));
    } else if (key == "k") {
      std::string value;
      fields >> value;
      model_.meta.k = ParseInt(value);
    }
  }

  std::vector<Token> Tokenize(std::string_view text) const {
    std::vector<Token> tokens;
    size_t p = 0;
    while (p < text.size()) {
      const char c = text[p];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++p;
      } else if (c == '+') {
        tokens.push_back({Token::Kind::kPlus, "+"});
        ++p;
      } else if (c == '-') {
        tokens.push_back({Token::Kind::kMinus, "-"});
        ++p;
      } else if (c == ':') {
        tokens.push_back({Token::Kind::kColon, ":"});
        ++p;
      } else if (c == '<' || c == '>' || c == '=') {
        size_t q = p + 1;
        while (q < text.size() &&
               (text[q] == '<' || text[q] == '>' || text[q] == '=')) {
          ++q;
        }
        std::string op(text.substr(p, q - p));
        if (op == "=<") op = "<=";
        if (op == "=>") op = ">=";
        if (op == ">") op = ">=";
        if (op == "<") op = "<=";
        if (op != "<=" && op != ">=" && op != "=") {
          Fail("bad operator '" + op + "'");
        }
        tokens.push_back({Token::Kind::kSense, op});
        p = q;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t q = p;
        while (q < text.size() &&
               std::isalnum(static_cast<unsigned char>(text[q]))) {
          ++q;
        }
        tokens.push_back({Token::Kind::kNumber, std::string(text.substr(p, q - p))});
        p = q;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t q = p;
        while (q < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[q])) ||
                text[q] == '_' || text[q] == '.')) {
          ++q;
        }
        tokens.push_back({Token::Kind::kName, std::string(text.substr(p, q - p))});
        p = q;
      } else {
        Fail(std::string("unexpected character '") + c + "'");
      }
    }
    return tokens;
  }

  int VariableIndex(const std::string& name) {
    auto [it, inserted] =
        index_.try_emplace(name, static_cast<int>(model_.variables.size()));
    if (inserted) {
      model_.variables.push_back({name, VarKind::kBinary, std::nullopt});
      kind_declared_.push_back(false);
      first_line_.push_back(line_number_);
    }
    return it->second;
  }

  // Parses "[label:] expr" starting at tokens[pos]; returns the label.
  std::string SplitLabel(const std::vector<Token>& tokens, size_t& pos) const {
    if (tokens.size() >= 2 && tokens[0].kind == Token::Kind::kName &&
        tokens[1].kind == Token::Kind::kColon) {
      pos = 2;
      return tokens[0].text;
    }
    pos = 0;
    return {};
  }

  std::vector<Term> ReadExpression(const std::vector<Token>& tokens,
                                   size_t& pos) {
    std::vector<Term> terms;
    bool expect_term = true;
    int sign = 1;
    while (pos < tokens.size() && tokens[pos].kind != Token::Kind::kSense) {
      const Token& tok = tokens[pos];
      if (tok.kind == Token::Kind::kPlus || tok.kind == Token::Kind::kMinus) {
        if (tok.kind == Token::Kind::kMinus) sign = -sign;
        expect_term = true;
        ++pos;
        continue;
      }
      if (!expect_term) Fail("missing operator between terms");
      int coef = 1;
      if (tok.kind == Token::Kind::kNumber) {
        coef = ParseInt(tok.text);
        ++pos;
        if (pos >= tokens.size() || tokens[pos].kind != Token::Kind::kName) {
          if (coef == 0 && terms.empty()) {
            expect_term = false;
            continue;  // "0" stands for an empty expression
          }
          Fail("coefficient without variable");
        }
      } else if (tok.kind != Token::Kind::kName) {
        Fail("unexpected token '" + tok.text + "'");
      }
      terms.push_back({VariableIndex(tokens[pos].text), sign * coef});
      ++pos;
      sign = 1;
      expect_term = false;
    }
    if (expect_term && !terms.empty()) Fail("dangling operator");
    return terms;
  }

  void ReadObjective(std::string_view line) {
    if (objective_seen_) Fail("objective spans several lines");
    objective_seen_ = true;
    const auto tokens = Tokenize(line);
    size_t pos = 0;
    SplitLabel(tokens, pos);
    model_.objective = ReadExpression(tokens, pos);
    if (pos != tokens.size()) Fail("trailing tokens in objective");
  }

  void ReadConstraint(std::string_view line) {
    const auto tokens = Tokenize(line);
    size_t pos = 0;
    std::string name = SplitLabel(tokens, pos);
    if (name.empty()) name = "c" + std::to_string(model_.constraints.size() + 1);
    LinearConstraint c;
    c.name = std::move(name);
    c.terms = ReadExpression(tokens, pos);
    if (pos >= tokens.size()) Fail("constraint without sense");
    const std::string op = tokens[pos++].text;
    if (op == ">=") {
      c.sense = Sense::kGreaterEqual;
    } else if (op == "=") {
      c.sense = Sense::kEqual;
    } else {
      Fail("only >= and = constraints are supported");
    }
    int sign = 1;
    if (pos < tokens.size() && tokens[pos].kind == Token::Kind::kMinus) {
      sign = -1;
      ++pos;
    }
    if (pos + 1 != tokens.size() || tokens[pos].kind != Token::Kind::kNumber) {
      Fail("expected integer right-hand side");
    }
    c.rhs = sign * ParseInt(tokens[pos].text);
    model_.constraints.push_back(std::move(c));
  }

  void ReadBound(std::string_view line) {
    const auto tokens = Tokenize(line);
    auto is = [&](size_t i, Token::Kind kind) {
      return i < tokens.size() && tokens[i].kind == kind;
    };
    // "0 <= x <= u" or "x <= u" or "x >= 0".
    if (tokens.size() == 5 && is(0, Token::Kind::kNumber) &&
        is(2, Token::Kind::kName) && is(4, Token::Kind::kNumber) &&
        tokens[1].text == "<=" && tokens[3].text == "<=") {
      if (ParseInt(tokens[0].text) != 0) Fail("lower bounds must be 0");
      model_.variables[VariableIndex(tokens[2].text)].upper_bound =
          ParseInt(tokens[4].text);
      return;
    }
    if (tokens.size() == 3 && is(0, Token::Kind::kName) &&
        is(2, Token::Kind::kNumber)) {
      const int var = VariableIndex(tokens[0].text);
      if (tokens[1].text == "<=") {
        model_.variables[var].upper_bound = ParseInt(tokens[2].text);
        return;
      }
      if (tokens[1].text == ">=" && ParseInt(tokens[2].text) == 0) return;
    }
    Fail("unsupported bound");
  }

  void ReadKinds(std::string_view line, VarKind kind) {
    std::istringstream names{std::string(line)};
    std::string name;
    while (names >> name) {
      const int var = VariableIndex(name);
      model_.variables[var].kind = kind;
      kind_declared_[var] = true;
    }
  }

  IlpModel model_;
  std::unordered_map<std::string, int> index_;
  std::vector<bool> kind_declared_;
  std::vector<int> first_line_;
  bool objective_seen_ = false;
  int line_number_ = 0;
};

}  // namespace

void WriteLp(const IlpModel& model, std::ostream& out) {
  out << "\\ formulation " << FormulationName(model.meta.formulation) << '\n';
  if (!model.meta.dims.empty()) {
    out << "\\ dims";
    for (int d : model.meta.dims) out << ' ' << d;
    out << '\n';
  }
  out << "\\ k " << model.meta.k << '\n';
  out << "Minimize\n obj: ";
  WriteExpression(model, model.objective, out);
  out << "\nSubject To\n";
  for (const LinearConstraint& c : model.constraints) {
    out << ' ' << c.name << ": ";
    WriteExpression(model, c.terms, out);
    out << (c.sense == Sense::kEqual ? " = " : " >= ") << c.rhs << '\n';
  }
  bool bounds_header = false;
  for (const Variable& v : model.variables) {
    if (v.kind != VarKind::kInteger || !v.upper_bound) continue;
    if (!bounds_header) out << "Bounds\n";
    bounds_header = true;
    out << " 0 <= " << v.name << " <= " << *v.upper_bound << '\n';
  }
  for (VarKind kind : {VarKind::kBinary, VarKind::kInteger}) {
    bool header = false;
    for (const Variable& v : model.variables) {
      if (v.kind != kind) continue;
      if (!header) out << (kind == VarKind::kBinary ? "Binaries\n" : "Generals\n");
      header = true;
      out << ' ' << v.name << '\n';
    }
  }
  out << "End\n";
}

std::string ToLpString(const IlpModel& model) {
  std::ostringstream out;
  WriteLp(model, out);
  return out.str();
}

void ExportLp(const IlpModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  WriteLp(model, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

IlpModel ParseLp(std::istream& in) { return LpReader().Read(in); }

IlpModel ParseLpString(const std::string& text) {
  std::istringstream in(text);
  return ParseLp(in);
}

IlpModel ParseLpFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return ParseLp(in);
}

}  // namespace wdimk
