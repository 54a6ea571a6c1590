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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fdcp/model.hpp"

// Exit codes: 0 = solved (solutions found or proven none), 1 = usage or
// I/O error, 2 = model parse/semantic error, 3 = oracle mismatch under
// --verify.

namespace {

int fail(const std::string& message, int code) {
  std::cerr << "error: " << message << "\n";
  return code;
}

// "queens:8" or "chain:5" -> model file text.
std::string generate(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("expected <name>:<n>");
  const std::string name = spec.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad size in '" + spec + "'");
  }
  if (n < 1) throw std::invalid_argument("size must be positive in '" + spec + "'");
  if (name == "queens") return fdcp::model::generateQueens(n);
  if (name == "chain") return fdcp::model::generateChain(n);
  throw std::invalid_argument("unknown generator '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fdcp - a small finite-domain constraint solver"};
  app.require_subcommand(1);

  CLI::App* solve = app.add_subcommand("solve", "Solve a model file or a built-in model");
  std::string file;
  std::string gen;
  bool json = false;
  bool verify = false;
  std::uint64_t maxNodes = 0;
  std::uint64_t maxSolutions = 0;
  solve->add_option("file", file, "Model file (see README for the format)");
  solve->add_option("--gen", gen, "Built-in model: queens:<n> or chain:<n>");
  solve->add_flag("--json", json, "Emit the report as a JSON document");
  solve->add_flag("--verify", verify, "Cross-check the solution set against brute force");
  CLI::Option* optNodes =
      solve->add_option("--max-nodes", maxNodes, "Override the node budget")->check(CLI::PositiveNumber);
  CLI::Option* optSolutions =
      solve->add_option("--max-solutions", maxSolutions, "Override the solution cap")
          ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (file.empty() == gen.empty()) {
    return fail("pass exactly one of a model file or --gen", 1);
  }

  std::string text;
  if (!gen.empty()) {
    try {
      text = generate(gen);
    } catch (const std::exception& e) {
      return fail(e.what(), 1);
    }
  } else {
    std::ifstream in(file);
    if (!in) return fail("cannot read '" + file + "'", 1);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }

  fdcp::model::Model model;
  try {
    model = fdcp::model::parseModel(text);
  } catch (const fdcp::model::ModelError& e) {
    return fail(e.what(), 2);
  }
  if (optNodes->count() > 0) model.limits.maxNodes = maxNodes;
  if (optSolutions->count() > 0) model.limits.maxSolutions = maxSolutions;

  const fdcp::model::RunReport report = fdcp::model::solveModel(model);

  fdcp::model::VerifyResult verdict;
  if (verify) {
    verdict = fdcp::model::verifyAgainstOracle(model);
    if (verdict.refused) return fail(verdict.detail, 1);
  }

  if (json) {
    std::cout << fdcp::model::formatReportJson(model, report);
  } else {
    std::cout << fdcp::model::formatReport(model, report);
  }
  if (verify) {
    if (verdict.matched) {
      std::cout << "verify: ok (" << verdict.solutionCount << " solutions)\n";
    } else {
      std::cout << "verify: mismatch - " << verdict.detail << "\n";
      return 3;
    }
  }
  return 0;
}
