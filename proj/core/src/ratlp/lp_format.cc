// Copyright 2026 The extform Authors.
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

#include "extform/ratlp/lp_format.h"

#include <cctype>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "extform/error.h"

namespace extform::ratlp {
namespace {

constexpr std::string_view kMagic = "\\ extform lp v1";

void CheckName(const std::string& name) {
  if (name.empty()) throw Error(ErrorCode::kInvalidArgument, "empty name");
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "name '" + name + "' contains whitespace");
    }
  }
}

void WriteTerms(const Model& model, const LinearExpr& terms,
                std::ostream& out) {
  for (const Term& t : terms) {
    out << ' ' << (sgn(t.coef) < 0 ? "" : "+") << FormatRat(t.coef) << ' '
        << model.variable(t.var).name;
  }
}

std::vector<std::string> Tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) tokens.push_back(std::move(tok));
  return tokens;
}

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  Model Parse() {
    std::string line;
    if (!Next(line) || line != kMagic) Fail("missing header");
    if (!Next(line)) Fail("missing objective sense");
    ObjectiveSense sense;
    if (line == "minimize") {
      sense = ObjectiveSense::kMinimize;
    } else if (line == "maximize") {
      sense = ObjectiveSense::kMaximize;
    } else {
      Fail("expected minimize or maximize");
    }
    if (!Next(line)) Fail("missing objective row");
    std::vector<std::string> obj_tokens = Tokenize(line);
    if (obj_tokens.empty() || obj_tokens.front() != "obj:") {
      Fail("expected 'obj:'");
    }
    if (!Next(line) || line != "subject to") Fail("expected 'subject to'");

    struct PendingRow {
      std::string name;
      std::vector<std::pair<Rat, std::string>> terms;
      RowSense sense;
      Rat rhs;
    };
    std::vector<PendingRow> rows;
    while (true) {
      if (!Next(line)) Fail("unexpected end of input");
      if (line == "bounds") break;
      std::vector<std::string> tok = Tokenize(line);
      if (tok.size() < 3 || tok.front().back() != ':') Fail("bad row");
      PendingRow row;
      row.name = tok.front().substr(0, tok.front().size() - 1);
      const std::size_t sense_at = tok.size() - 2;
      if (tok[sense_at] == ">=") {
        row.sense = RowSense::kGreaterEqual;
      } else if (tok[sense_at] == "<=") {
        row.sense = RowSense::kLessEqual;
      } else if (tok[sense_at] == "=") {
        row.sense = RowSense::kEqual;
      } else {
        Fail("bad row sense");
      }
      row.rhs = Number(tok.back());
      if ((sense_at - 1) % 2 != 0) Fail("unpaired coefficient");
      for (std::size_t k = 1; k < sense_at; k += 2) {
        row.terms.emplace_back(Number(tok[k]), tok[k + 1]);
      }
      rows.push_back(std::move(row));
    }

    std::vector<Variable> vars;
    std::unordered_map<std::string, int> index;
    while (true) {
      if (!Next(line)) Fail("unexpected end of input");
      if (line == "end") break;
      std::vector<std::string> tok = Tokenize(line);
      if (tok.size() != 5 || tok[1] != "<=" || tok[3] != "<=") {
        Fail("bad bound line");
      }
      Variable v{tok[2], std::nullopt, std::nullopt};
      if (tok[0] != "-inf") v.lower = Number(tok[0]);
      if (tok[4] != "+inf") v.upper = Number(tok[4]);
      if (!index.emplace(v.name, static_cast<int>(vars.size())).second) {
        Fail("duplicate variable '" + v.name + "'");
      }
      vars.push_back(std::move(v));
    }

    auto lookup = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end()) Fail("undeclared variable '" + name + "'");
      return it->second;
    };
    Objective objective{sense, {}};
    if ((obj_tokens.size() - 1) % 2 != 0) Fail("unpaired objective term");
    for (std::size_t k = 1; k < obj_tokens.size(); k += 2) {
      objective.terms.push_back(
          {lookup(obj_tokens[k + 1]), Number(obj_tokens[k])});
    }
    std::vector<Constraint> constraints;
    constraints.reserve(rows.size());
    for (PendingRow& row : rows) {
      Constraint c{std::move(row.name), {}, row.sense, std::move(row.rhs)};
      for (auto& [coef, name] : row.terms) {
        c.terms.push_back({lookup(name), std::move(coef)});
      }
      constraints.push_back(std::move(c));
    }
    return Model::Create(std::move(vars), std::move(constraints),
                         std::move(objective));
  }

 private:
  bool Next(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      line = line.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  Rat Number(const std::string& token) {
    try {
      return ParseRat(token);
    } catch (const Error&) {
      Fail("bad number '" + token + "'");
    }
  }

  [[noreturn]] void Fail(const std::string& what) {
    throw Error(ErrorCode::kParse,
                "lp line " + std::to_string(line_no_) + ": " + what);
  }

  std::istream& in_;
  int line_no_ = 0;
};

}  // namespace

void WriteLp(const Model& model, std::ostream& out) {
  for (const Variable& v : model.variables()) CheckName(v.name);
  for (const Constraint& c : model.constraints()) CheckName(c.name);
  out << kMagic << '\n';
  out << (model.objective().sense == ObjectiveSense::kMinimize ? "minimize"
                                                                : "maximize")
      << '\n';
  out << " obj:";
  WriteTerms(model, model.objective().terms, out);
  out << "\nsubject to\n";
  for (const Constraint& c : model.constraints()) {
    out << ' ' << c.name << ':';
    WriteTerms(model, c.terms, out);
    out << ' ' << RowSenseSymbol(c.sense) << ' ' << FormatRat(c.rhs) << '\n';
  }
  out << "bounds\n";
  for (const Variable& v : model.variables()) {
    out << ' ' << (v.lower ? FormatRat(*v.lower) : "-inf") << " <= " << v.name
        << " <= " << (v.upper ? FormatRat(*v.upper) : "+inf") << '\n';
  }
  out << "end\n";
}

std::string WriteLp(const Model& model) {
  std::ostringstream out;
  WriteLp(model, out);
  return out.str();
}

Model ReadLp(std::istream& in) { return Reader(in).Parse(); }

Model ReadLp(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ReadLp(in);
}

}  // namespace extform::ratlp
