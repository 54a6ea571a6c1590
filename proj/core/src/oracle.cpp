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

#include "fdcp/oracle.hpp"

namespace fdcp::oracle {

std::optional<std::uint64_t> searchSpaceSize(const Problem& problem) {
  std::uint64_t space = 1;
  for (const VarBounds& b : problem.bounds) {
    if (b.min > b.max) return std::nullopt;
    // Unsigned arithmetic so extreme int64 bounds do not overflow.
    const std::uint64_t width =
        static_cast<std::uint64_t>(b.max) - static_cast<std::uint64_t>(b.min) + 1;
    if (width == 0 || width > kMaxSearchSpace) return std::nullopt;
    if (space > kMaxSearchSpace / width) return std::nullopt;
    space *= width;
  }
  return space;
}

bool satisfies(const Problem& problem, const Assignment& values) {
  for (const Relation& relation : problem.relations) {
    const bool holds = std::visit(
        [&](const auto& r) {
          using R = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<R, Leq>) {
            return values[r.x] <= values[r.y];
          } else if constexpr (std::is_same_v<R, NeqOffset>) {
            return values[r.x] + r.a != values[r.y] + r.b;
          } else {
            static_assert(std::is_same_v<R, AssignEq>);
            return values[r.x] == r.value;
          }
        },
        relation);
    if (!holds) return false;
  }
  return true;
}

namespace {

// Walks the box in lexicographic order and hands each satisfying
// assignment to visit.
template <typename Visit>
void forEachSolution(const Problem& problem, Visit&& visit) {
  const std::size_t n = problem.bounds.size();
  Assignment values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = problem.bounds[i].min;
  for (;;) {
    if (satisfies(problem, values)) visit(values);
    // Odometer step: rightmost variable is least significant.
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (values[i] < problem.bounds[i].max) {
        ++values[i];
        for (std::size_t j = i + 1; j < n; ++j) values[j] = problem.bounds[j].min;
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

std::optional<std::vector<Assignment>> enumerate(const Problem& problem) {
  if (!searchSpaceSize(problem)) return std::nullopt;
  std::vector<Assignment> solutions;
  forEachSolution(problem, [&](const Assignment& values) { solutions.push_back(values); });
  return solutions;
}

std::optional<std::uint64_t> countSolutions(const Problem& problem) {
  if (!searchSpaceSize(problem)) return std::nullopt;
  std::uint64_t count = 0;
  forEachSolution(problem, [&](const Assignment&) { ++count; });
  return count;
}

}  // namespace fdcp::oracle
