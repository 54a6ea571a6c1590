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

#ifndef FDCP_ORACLE_HPP
#define FDCP_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

// Brute-force CSP enumerator used for differential testing and the
// `--verify` mode of the CLI. It evaluates constraints semantically on
// complete assignments and deliberately shares no code with the solver's
// propagation or search.

namespace fdcp::oracle {

struct VarBounds {
  std::int64_t min = 0;
  std::int64_t max = 0;
};

// x <= y
struct Leq {
  std::size_t x = 0;
  std::size_t y = 0;
};

// x + a != y + b
struct NeqOffset {
  std::size_t x = 0;
  std::size_t y = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

// x == value
struct AssignEq {
  std::size_t x = 0;
  std::int64_t value = 0;
};

using Relation = std::variant<Leq, NeqOffset, AssignEq>;

struct Problem {
  std::vector<VarBounds> bounds;
  std::vector<Relation> relations;
};

using Assignment = std::vector<std::int64_t>;

// Enumeration refuses search spaces larger than this many points.
inline constexpr std::uint64_t kMaxSearchSpace = 10'000'000;

// Number of complete assignments in the box, or nullopt when it exceeds
// kMaxSearchSpace (or a domain is empty).
std::optional<std::uint64_t> searchSpaceSize(const Problem& problem);

bool satisfies(const Problem& problem, const Assignment& values);

// All satisfying total assignments in lexicographic order of values
// (first variable most significant). nullopt = refused by the size guard.
std::optional<std::vector<Assignment>> enumerate(const Problem& problem);

std::optional<std::uint64_t> countSolutions(const Problem& problem);

}  // namespace fdcp::oracle

#endif  // FDCP_ORACLE_HPP
