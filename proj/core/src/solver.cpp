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

#include "fdcp/solver.hpp"

#include <utility>

namespace fdcp {

IntervalVar& Solver::makeVar(std::int64_t initMin, std::int64_t initMax, std::string name) {
  vars_.push_back(
      std::make_unique<IntervalVar>(queue_, trail_, initMin, initMax, std::move(name)));
  return *vars_.back();
}

bool Solver::add(std::unique_ptr<Propagator> propagator) {
  const bool ok = propagator->init();
  if (!ok) rootFailed_ = true;
  propagators_.push_back(std::move(propagator));
  return ok;
}

bool Solver::propagate() {
  const bool ok = queue_.propagate();
  return ok && !rootFailed_;
}

}  // namespace fdcp
