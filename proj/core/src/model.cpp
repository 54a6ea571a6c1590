// Copyright 2026 the fdcp authors
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

#include "fdcp/model.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <map>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fdcp/constraints.hpp"
#include "fdcp/oracle.hpp"
#include "fdcp/search.hpp"
#include "fdcp/solver.hpp"

namespace fdcp::model {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t parseInt(const std::string& token, int line) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ModelError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

std::uint64_t parsePositive(const std::string& token, int line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0) {
    throw ModelError(line, "expected a positive integer, got '" + token + "'");
  }
  return value;
}

std::size_t resolveVar(const std::map<std::string, std::size_t>& byName,
                       const std::string& token, int line) {
  const auto it = byName.find(token);
  if (it == byName.end()) throw ModelError(line, "unknown variable '" + token + "'");
  return it->second;
}

}  // namespace

Model parseModel(std::string_view text) {
  Model model;
  std::map<std::string, std::size_t> byName;
  bool sawSearch = false;

  int lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineNo;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;

    const std::string& directive = tokens[0];
    if (directive == "var") {
      if (tokens.size() != 4) throw ModelError(lineNo, "expected: var <name> <min> <max>");
      VarDecl decl{tokens[1], parseInt(tokens[2], lineNo), parseInt(tokens[3], lineNo)};
      if (byName.contains(decl.name)) {
        throw ModelError(lineNo, "duplicate variable '" + decl.name + "'");
      }
      if (decl.min > decl.max) {
        throw ModelError(lineNo, "empty domain for '" + decl.name + "': min > max");
      }
      byName.emplace(decl.name, model.vars.size());
      model.vars.push_back(std::move(decl));
    } else if (directive == "constraint") {
      if (tokens.size() < 2) throw ModelError(lineNo, "missing constraint kind");
      const std::string& kind = tokens[1];
      if (kind == "leq") {
        if (tokens.size() != 4) throw ModelError(lineNo, "expected: constraint leq <x> <y>");
        model.constraints.push_back(LeqDecl{resolveVar(byName, tokens[2], lineNo),
                                            resolveVar(byName, tokens[3], lineNo)});
      } else if (kind == "neq_offset") {
        if (tokens.size() != 6) {
          throw ModelError(lineNo, "expected: constraint neq_offset <x> <y> <a> <b>");
        }
        model.constraints.push_back(NeqOffsetDecl{
            resolveVar(byName, tokens[2], lineNo), resolveVar(byName, tokens[3], lineNo),
            parseInt(tokens[4], lineNo), parseInt(tokens[5], lineNo)});
      } else {
        throw ModelError(lineNo, "unknown constraint kind '" + kind + "'");
      }
    } else if (directive == "search") {
      if (tokens.size() < 2 || tokens[1] != "static_min") {
        throw ModelError(lineNo, "expected: search static_min [names...]");
      }
      if (sawSearch) throw ModelError(lineNo, "duplicate search directive");
      sawSearch = true;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        model.searchOrder.push_back(resolveVar(byName, tokens[i], lineNo));
      }
      if (!model.searchOrder.empty()) {
        std::vector<bool> seen(model.vars.size(), false);
        for (std::size_t index : model.searchOrder) {
          if (seen[index]) {
            throw ModelError(lineNo, "variable '" + model.vars[index].name +
                                         "' listed twice in search order");
          }
          seen[index] = true;
        }
        if (model.searchOrder.size() != model.vars.size()) {
          throw ModelError(lineNo, "search order must list every declared variable");
        }
      }
    } else if (directive == "limit") {
      if (tokens.size() != 3) throw ModelError(lineNo, "expected: limit nodes|solutions <k>");
      if (tokens[1] == "nodes") {
        model.limits.maxNodes = parsePositive(tokens[2], lineNo);
      } else if (tokens[1] == "solutions") {
        model.limits.maxSolutions = parsePositive(tokens[2], lineNo);
      } else {
        throw ModelError(lineNo, "unknown limit '" + tokens[1] + "'");
      }
    } else {
      throw ModelError(lineNo, "unknown directive '" + directive + "'");
    }
  }

  if (model.searchOrder.empty()) {
    model.searchOrder.resize(model.vars.size());
    for (std::size_t i = 0; i < model.vars.size(); ++i) model.searchOrder[i] = i;
  }
  return model;
}

std::string generateQueens(int n) {
  if (n < 1) throw ModelError(0, "queens size must be positive");
  std::ostringstream out;
  out << "# " << n << "-queens: one queen per row, value = column\n";
  for (int i = 1; i <= n; ++i) out << "var q" << i << " 1 " << n << "\n";
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int d = j - i;
      out << "constraint neq_offset q" << i << " q" << j << " 0 0\n";
      out << "constraint neq_offset q" << i << " q" << j << " " << d << " 0\n";
      out << "constraint neq_offset q" << i << " q" << j << " 0 " << d << "\n";
    }
  }
  out << "search static_min\n";
  return out.str();
}

std::string generateChain(int n) {
  if (n < 1) throw ModelError(0, "chain size must be positive");
  std::ostringstream out;
  out << "# ordering chain: c1 <= c2 <= ... <= c" << n << "\n";
  for (int i = 1; i <= n; ++i) out << "var c" << i << " 0 " << n - 1 << "\n";
  for (int i = 1; i < n; ++i) out << "constraint leq c" << i << " c" << i + 1 << "\n";
  out << "search static_min\n";
  return out.str();
}

namespace {

// Instantiates the model's variables and propagators into the solver.
// Returns the variables in declaration order.
std::vector<IntervalVar*> buildSolver(const Model& model, Solver& solver) {
  std::vector<IntervalVar*> vars;
  vars.reserve(model.vars.size());
  for (const VarDecl& decl : model.vars) {
    vars.push_back(&solver.makeVar(decl.min, decl.max, decl.name));
  }
  for (const ConstraintDecl& constraint : model.constraints) {
    std::visit(
        [&](const auto& c) {
          using C = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<C, LeqDecl>) {
            solver.add(std::make_unique<LowerEqual>(*vars[c.x], *vars[c.y]));
          } else {
            solver.add(std::make_unique<NotEqualOffset>(*vars[c.x], *vars[c.y], c.a, c.b));
          }
        },
        constraint);
  }
  return vars;
}

std::vector<IntervalVar*> orderedVars(const Model& model, const std::vector<IntervalVar*>& vars) {
  std::vector<IntervalVar*> ordered;
  ordered.reserve(model.searchOrder.size());
  for (std::size_t index : model.searchOrder) ordered.push_back(vars[index]);
  return ordered;
}

}  // namespace

RunReport solveModel(const Model& model) {
  const auto start = std::chrono::steady_clock::now();

  Solver solver;
  std::vector<IntervalVar*> vars = buildSolver(model, solver);
  StaticMin heuristic(solver.trail(), orderedVars(model, vars));
  Search search(solver, heuristic);
  search.recordSolutions(vars, model.limits.maxSolutions);

  RunReport report;
  report.complete = search.search(model.limits.maxNodes);
  const SearchStats& stats = search.stats();
  report.nodes = stats.nodes;
  report.failures = stats.failures;
  report.solutionsFound = stats.solutions;
  report.rootFailed = stats.nodes == 0 && stats.solutions == 0 && stats.failures > 0;
  report.solutions = search.solutions();

  const auto end = std::chrono::steady_clock::now();
  report.wallTimeMs = std::chrono::duration<double, std::milli>(end - start).count();
  return report;
}

std::string formatReport(const Model& model, const RunReport& report) {
  std::ostringstream out;
  for (const auto& solution : report.solutions) {
    out << "solution:";
    for (std::size_t i = 0; i < solution.size(); ++i) {
      out << " " << model.vars[i].name << "=" << solution[i];
    }
    out << "\n";
  }
  out << "stats: nodes=" << report.nodes << " failures=" << report.failures
      << " solutions_found=" << report.solutionsFound
      << " complete=" << (report.complete ? "true" : "false")
      << " root_failed=" << (report.rootFailed ? "true" : "false")
      << " wall_time_ms=" << report.wallTimeMs << "\n";
  return out.str();
}

std::string formatReportJson(const Model& model, const RunReport& report) {
  nlohmann::ordered_json doc;
  doc["solutions"] = nlohmann::ordered_json::array();
  for (const auto& solution : report.solutions) {
    nlohmann::ordered_json entry = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < solution.size(); ++i) {
      entry[model.vars[i].name] = solution[i];
    }
    doc["solutions"].push_back(std::move(entry));
  }
  doc["stats"] = {{"nodes", report.nodes},
                  {"failures", report.failures},
                  {"solutions_found", report.solutionsFound},
                  {"complete", report.complete},
                  {"wall_time_ms", report.wallTimeMs}};
  doc["root_failed"] = report.rootFailed;
  return doc.dump(2) + "\n";
}

VerifyResult verifyAgainstOracle(const Model& model) {
  VerifyResult result;

  // The reference problem lists variables in search order, so its
  // lexicographic enumeration and the solver's left-first descent should
  // produce the same first solution.
  std::vector<std::size_t> position(model.vars.size());
  oracle::Problem problem;
  problem.bounds.reserve(model.vars.size());
  for (std::size_t k = 0; k < model.searchOrder.size(); ++k) {
    const VarDecl& decl = model.vars[model.searchOrder[k]];
    position[model.searchOrder[k]] = k;
    problem.bounds.push_back({decl.min, decl.max});
  }
  for (const ConstraintDecl& constraint : model.constraints) {
    std::visit(
        [&](const auto& c) {
          using C = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<C, LeqDecl>) {
            problem.relations.push_back(oracle::Leq{position[c.x], position[c.y]});
          } else {
            problem.relations.push_back(oracle::NeqOffset{position[c.x], position[c.y], c.a, c.b});
          }
        },
        constraint);
  }

  const auto expected = oracle::enumerate(problem);
  if (!expected) {
    result.refused = true;
    result.detail = "search space exceeds the enumeration guard";
    return result;
  }

  Solver solver;
  std::vector<IntervalVar*> vars = buildSolver(model, solver);
  std::vector<IntervalVar*> ordered = orderedVars(model, vars);
  StaticMin heuristic(solver.trail(), ordered);
  Search search(solver, heuristic);
  std::vector<std::vector<std::int64_t>> found;
  search.onSolution([&] {
    std::vector<std::int64_t> values;
    values.reserve(ordered.size());
    for (IntervalVar* var : ordered) values.push_back(var->min());
    found.push_back(std::move(values));
  });
  search.search();

  result.solutionCount = expected->size();
  if (!found.empty() && !expected->empty() && found.front() != expected->front()) {
    result.detail = "first solution differs from the reference enumeration";
    return result;
  }
  std::vector<std::vector<std::int64_t>> sortedFound = found;
  std::vector<std::vector<std::int64_t>> sortedExpected = *expected;
  std::sort(sortedFound.begin(), sortedFound.end());
  std::sort(sortedExpected.begin(), sortedExpected.end());
  if (sortedFound != sortedExpected) {
    result.detail = "solver found " + std::to_string(found.size()) +
                    " solutions, reference enumeration found " + std::to_string(expected->size());
    return result;
  }
  result.matched = true;
  return result;
}

}  // namespace fdcp::model
