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

#ifndef FDCP_TESTS_RANDOM_CSP_HPP
#define FDCP_TESTS_RANDOM_CSP_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "fdcp/constraints.hpp"
#include "fdcp/oracle.hpp"
#include "fdcp/solver.hpp"

namespace fdcp::test {

// Seed-fixed random bound CSPs over <= 4 variables with domain width <= 6
// and <= 6 constraints drawn from {leq, neq_offset}. The instance doubles
// as an oracle problem and as solver input so differential tests build
// both sides from the same description.
struct RandomCsp {
  std::vector<oracle::VarBounds> bounds;
  std::vector<oracle::Relation> relations;

  oracle::Problem toOracleProblem() const { return {bounds, relations}; }

  // Instantiates variables and propagators; returns the variables in
  // declaration order.
  std::vector<IntervalVar*> build(Solver& solver) const {
    std::vector<IntervalVar*> vars;
    for (const oracle::VarBounds& b : bounds) vars.push_back(&solver.makeVar(b.min, b.max));
    for (const oracle::Relation& relation : relations) {
      if (const auto* leq = std::get_if<oracle::Leq>(&relation)) {
        solver.add(std::make_unique<LowerEqual>(*vars[leq->x], *vars[leq->y]));
      } else if (const auto* neq = std::get_if<oracle::NeqOffset>(&relation)) {
        solver.add(
            std::make_unique<NotEqualOffset>(*vars[neq->x], *vars[neq->y], neq->a, neq->b));
      }
    }
    return vars;
  }
};

inline RandomCsp makeRandomCsp(std::mt19937_64& rng) {
  RandomCsp csp;
  std::uniform_int_distribution<int> varCount(1, 4);
  std::uniform_int_distribution<std::int64_t> low(-5, 5);
  std::uniform_int_distribution<std::int64_t> width(0, 5);
  const int n = varCount(rng);
  for (int i = 0; i < n; ++i) {
    const std::int64_t lo = low(rng);
    csp.bounds.push_back({lo, lo + width(rng)});
  }
  std::uniform_int_distribution<int> constraintCount(0, 6);
  std::uniform_int_distribution<std::size_t> pick(0, static_cast<std::size_t>(n) - 1);
  std::uniform_int_distribution<std::int64_t> offset(-3, 3);
  std::uniform_int_distribution<int> kind(0, 1);
  const int m = constraintCount(rng);
  for (int c = 0; c < m; ++c) {
    std::size_t x = pick(rng);
    std::size_t y = pick(rng);
    if (x == y) y = (y + 1) % static_cast<std::size_t>(n);
    if (x == y) continue;  // single-variable instance
    if (kind(rng) == 0) {
      csp.relations.push_back(oracle::Leq{x, y});
    } else {
      csp.relations.push_back(oracle::NeqOffset{x, y, offset(rng), offset(rng)});
    }
  }
  return csp;
}

}  // namespace fdcp::test

#endif  // FDCP_TESTS_RANDOM_CSP_HPP
