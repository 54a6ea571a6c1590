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

#ifndef FDCP_INTERVAL_VAR_HPP
#define FDCP_INTERVAL_VAR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fdcp/propagation.hpp"
#include "fdcp/trail.hpp"

namespace fdcp {

// An integer variable whose domain is the interval [min, max]. Both bounds
// are reversible, so every tightening performed inside a search node is
// undone when the node is backtracked.
//
// Propagators watch bound events: minWatchers wake when the minimum
// increases, maxWatchers when the maximum decreases. Watcher lists are
// append-only and never trailed; registrations persist for the solver's
// lifetime and duplicates are kept as registered.
class IntervalVar {
 public:
  IntervalVar(PropagationQueue& queue, Trail& trail, std::int64_t initMin,
              std::int64_t initMax, std::string name = {});
  IntervalVar(const IntervalVar&) = delete;
  IntervalVar& operator=(const IntervalVar&) = delete;

  std::int64_t min() const noexcept { return min_.value(); }
  std::int64_t max() const noexcept { return max_.value(); }
  bool isAssigned() const noexcept { return min() == max(); }
  const std::string& name() const noexcept { return name_; }

  void watchMin(Propagator& propagator) { minWatchers_.push_back(&propagator); }
  void watchMax(Propagator& propagator) { maxWatchers_.push_back(&propagator); }

  // Raises the minimum to newMin. Returns false iff newMin exceeds the
  // maximum (the domain would empty; it is left untouched since the node
  // is about to be undone). A non-tightening value is a successful no-op;
  // a strict tightening wakes every min watcher in registration order.
  bool updateMin(std::int64_t newMin);

  // Mirror image of updateMin.
  bool updateMax(std::int64_t newMax);

 private:
  PropagationQueue& queue_;
  TrailedInt min_;
  TrailedInt max_;
  std::vector<Propagator*> minWatchers_;
  std::vector<Propagator*> maxWatchers_;
  std::string name_;
};

}  // namespace fdcp

#endif  // FDCP_INTERVAL_VAR_HPP
