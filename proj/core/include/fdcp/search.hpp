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

#ifndef FDCP_SEARCH_HPP
#define FDCP_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "fdcp/interval_var.hpp"
#include "fdcp/solver.hpp"
#include "fdcp/trail.hpp"

namespace fdcp {

// One branching operation: applying it turns the current node into one of
// its children. Returns false iff the operation directly empties a domain.
class Decision {
 public:
  virtual ~Decision() = default;
  virtual bool apply() = 0;
};

// x == v; fails when v lies outside the domain.
class AssignDec final : public Decision {
 public:
  AssignDec(IntervalVar& x, std::int64_t v) : x_(x), v_(v) {}
  bool apply() override { return x_.updateMin(v_) && x_.updateMax(v_); }

 private:
  IntervalVar& x_;
  std::int64_t v_;
};

// x >= v; fails when v exceeds the maximum.
class GreaterEqualDec final : public Decision {
 public:
  GreaterEqualDec(IntervalVar& x, std::int64_t v) : x_(x), v_(v) {}
  bool apply() override { return x_.updateMin(v_); }

 private:
  IntervalVar& x_;
  std::int64_t v_;
};

// x <= v; fails when v is below the minimum.
class LowerEqualDec final : public Decision {
 public:
  LowerEqualDec(IntervalVar& x, std::int64_t v) : x_(x), v_(v) {}
  bool apply() override { return x_.updateMax(v_); }

 private:
  IntervalVar& x_;
  std::int64_t v_;
};

// The ordered children of one search node, consumed at most once, front to
// back. An empty sequence marks a solution leaf.
class DecisionSequence {
 public:
  DecisionSequence() = default;

  void push(std::unique_ptr<Decision> decision) { decisions_.push_back(std::move(decision)); }

  bool empty() const noexcept { return decisions_.empty(); }
  bool hasNext() const noexcept { return next_ < decisions_.size(); }

  // Pre: hasNext().
  Decision& next() { return *decisions_[next_++]; }

 private:
  std::vector<std::unique_ptr<Decision>> decisions_;
  std::size_t next_ = 0;
};

// Produces, for the current node, the ordered sequence of child decisions.
// Called once per node, after propagation reached its fixpoint.
class Heuristic {
 public:
  virtual ~Heuristic() = default;
  virtual DecisionSequence nextDecisions() = 0;
};

// Static-order binary branching: picks the first unassigned variable in
// the given order and branches x <= min(x) on the left, x >= min(x) + 1 on
// the right. The scan position is a reversible int so backtracking reopens
// earlier variables without rescanning from the front each time.
class StaticMin final : public Heuristic {
 public:
  StaticMin(Trail& trail, std::vector<IntervalVar*> vars)
      : vars_(std::move(vars)), nextUnassigned_(trail, 0) {}

  DecisionSequence nextDecisions() override;

 private:
  std::vector<IntervalVar*> vars_;
  TrailedInt nextUnassigned_;
};

struct SearchStats {
  std::uint64_t nodes = 0;      // decisions applied; root expansion not counted
  std::uint64_t failures = 0;   // failed decision applications + conflicts
  std::uint64_t solutions = 0;  // solution leaves reached
};

// Depth-first search over the tree defined by a heuristic, driven by an
// explicit stack of decision sequences instead of recursion. The stack
// holds one sequence per expanded, not-yet-exhausted node of the current
// branch.
//
// Each search() run starts from the solver's root state and fully restores
// it on return, so a Search object may be rerun; stats and recorded
// solutions are per run. The solution hook must not mutate any domain.
class Search {
 public:
  static constexpr std::uint64_t kUnlimitedNodes = std::numeric_limits<std::uint64_t>::max();

  Search(Solver& solver, Heuristic& heuristic)
      : solver_(solver), trail_(solver.trail()), heuristic_(heuristic) {}
  Search(const Search&) = delete;
  Search& operator=(const Search&) = delete;

  // Replaces the default solution recording with a user hook.
  void onSolution(std::function<void()> handler) { handler_ = std::move(handler); }

  // Snapshot min() of the given variables at every solution, up to cap.
  // Active only while no custom hook is installed.
  void recordSolutions(std::vector<IntervalVar*> vars, std::size_t cap = 1000) {
    recordVars_ = std::move(vars);
    recordCap_ = cap;
  }

  // Explores at most maxNodes nodes. Returns true iff the whole tree was
  // explored with fewer than maxNodes nodes; a run that ends exactly at
  // the budget reports false even when the tree happens to be exhausted.
  // The root state is restored before returning.
  bool search(std::uint64_t maxNodes = kUnlimitedNodes);

  const SearchStats& stats() const noexcept { return stats_; }
  const std::vector<std::vector<std::int64_t>>& solutions() const noexcept { return solutions_; }

  // Number of open sequences on the decision stack.
  std::size_t frontierDepth() const noexcept { return decisions_.size(); }

 private:
  bool propagateAndExpand();
  void fireSolution();

  Solver& solver_;
  Trail& trail_;
  Heuristic& heuristic_;
  std::vector<DecisionSequence> decisions_;
  std::function<void()> handler_;
  std::vector<IntervalVar*> recordVars_;
  std::size_t recordCap_ = 1000;
  std::vector<std::vector<std::int64_t>> solutions_;
  SearchStats stats_;
};

}  // namespace fdcp

#endif  // FDCP_SEARCH_HPP
