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

#include "fdcp/search.hpp"

namespace fdcp {

DecisionSequence StaticMin::nextDecisions() {
  std::size_t i = static_cast<std::size_t>(nextUnassigned_.value());
  while (i < vars_.size() && vars_[i]->isAssigned()) ++i;
  nextUnassigned_.setValue(static_cast<std::int64_t>(i));
  DecisionSequence sequence;
  if (i == vars_.size()) return sequence;  // leaf: everything is assigned
  IntervalVar& x = *vars_[i];
  const std::int64_t v = x.min();
  sequence.push(std::make_unique<LowerEqualDec>(x, v));
  sequence.push(std::make_unique<GreaterEqualDec>(x, v + 1));
  return sequence;
}

void Search::fireSolution() {
  ++stats_.solutions;
  if (handler_) {
    handler_();
    return;
  }
  if (!recordVars_.empty() && solutions_.size() < recordCap_) {
    std::vector<std::int64_t> values;
    values.reserve(recordVars_.size());
    for (IntervalVar* var : recordVars_) values.push_back(var->min());
    solutions_.push_back(std::move(values));
  }
}

// Visits a freshly entered node: propagates, then asks the heuristic for
// children. Returns false on leaves (failed or solution), true after
// pushing the children of an internal node.
bool Search::propagateAndExpand() {
  if (!solver_.propagate()) {
    ++stats_.failures;
    return false;
  }
  DecisionSequence children = heuristic_.nextDecisions();
  if (children.empty()) {
    fireSolution();
    return false;
  }
  decisions_.push_back(std::move(children));
  return true;
}

bool Search::search(std::uint64_t maxNodes) {
  stats_ = SearchStats{};
  solutions_.clear();
  std::uint64_t nodes = 0;

  if (propagateAndExpand()) {
    while (!decisions_.empty() && nodes < maxNodes) {
      DecisionSequence& top = decisions_.back();
      if (top.hasNext()) {
        ++nodes;
        trail_.newNode();
        const bool applied = top.next().apply();
        if (!applied) ++stats_.failures;
        if (!applied || !propagateAndExpand()) trail_.undoNode();
      } else {
        decisions_.pop_back();
        trail_.undoNode();
      }
    }
  }

  trail_.undoAll();
  decisions_.clear();
  stats_.nodes = nodes;
  return nodes < maxNodes;
}

}  // namespace fdcp
