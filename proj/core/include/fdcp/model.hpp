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

#ifndef FDCP_MODEL_HPP
#define FDCP_MODEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Model file front end used by the CLI. The format is line oriented:
//
//   # comment (also allowed at end of line)
//   var <name> <min> <max>
//   constraint leq <x> <y>
//   constraint neq_offset <x> <y> <a> <b>
//   search static_min [names...]      # names empty = declaration order
//   limit nodes <k>
//   limit solutions <k>
//
// Constraints reference declared variable names; a non-empty search order
// must list every declared variable exactly once.

namespace fdcp::model {

inline constexpr std::uint64_t kDefaultMaxNodes = std::uint64_t{1} << 62;
inline constexpr std::uint64_t kDefaultMaxSolutions = 1000;

struct VarDecl {
  std::string name;
  std::int64_t min = 0;
  std::int64_t max = 0;
};

// Constraint arguments are variable indices into Model::vars, resolved
// during parsing.
struct LeqDecl {
  std::size_t x = 0;
  std::size_t y = 0;
};

struct NeqOffsetDecl {
  std::size_t x = 0;
  std::size_t y = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

using ConstraintDecl = std::variant<LeqDecl, NeqOffsetDecl>;

struct Limits {
  std::uint64_t maxNodes = kDefaultMaxNodes;
  std::uint64_t maxSolutions = kDefaultMaxSolutions;
};

struct Model {
  std::vector<VarDecl> vars;
  std::vector<ConstraintDecl> constraints;
  std::vector<std::size_t> searchOrder;  // permutation of variable indices
  Limits limits;
};

// Parse or semantic error; line() is the 1-based offending line.
class ModelError : public std::runtime_error {
 public:
  ModelError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Throws ModelError on malformed input.
Model parseModel(std::string_view text);

// Built-in model generators; both return model file text for parseModel.
std::string generateQueens(int n);
std::string generateChain(int n);

struct RunReport {
  std::vector<std::vector<std::int64_t>> solutions;  // values in declaration order
  std::uint64_t nodes = 0;
  std::uint64_t failures = 0;
  std::uint64_t solutionsFound = 0;
  bool complete = false;
  bool rootFailed = false;
  double wallTimeMs = 0.0;
};

// Builds a solver from the model and runs a static-min search under the
// model's limits. Solution order is deterministic; an infeasible model is
// reported through rootFailed, not an error.
RunReport solveModel(const Model& model);

// `solution:` lines followed by one `stats:` line.
std::string formatReport(const Model& model, const RunReport& report);

// The same data as one JSON document (stable key and solution order).
std::string formatReportJson(const Model& model, const RunReport& report);

struct VerifyResult {
  bool matched = false;
  bool refused = false;  // search space too large for the enumeration oracle
  std::uint64_t solutionCount = 0;
  std::string detail;
};

// Differential check: exhaustive search (ignoring the model's limits)
// against independent brute-force enumeration. Matches iff the solution
// sets are equal and the first solutions agree.
VerifyResult verifyAgainstOracle(const Model& model);

}  // namespace fdcp::model

#endif  // FDCP_MODEL_HPP
