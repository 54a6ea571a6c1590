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

#include "fdcp/interval_var.hpp"

#include <cassert>
#include <utility>

namespace fdcp {

IntervalVar::IntervalVar(PropagationQueue& queue, Trail& trail, std::int64_t initMin,
                         std::int64_t initMax, std::string name)
    : queue_(queue), min_(trail, initMin), max_(trail, initMax), name_(std::move(name)) {
  assert(initMin <= initMax && "empty initial domain");
}

bool IntervalVar::updateMin(std::int64_t newMin) {
  if (newMin > max_.value()) return false;
  if (newMin <= min_.value()) return true;
  min_.setValue(newMin);
  for (Propagator* propagator : minWatchers_) queue_.enqueue(*propagator);
  return true;
}

bool IntervalVar::updateMax(std::int64_t newMax) {
  if (newMax < min_.value()) return false;
  if (newMax >= max_.value()) return true;
  max_.setValue(newMax);
  for (Propagator* propagator : maxWatchers_) queue_.enqueue(*propagator);
  return true;
}

}  // namespace fdcp
