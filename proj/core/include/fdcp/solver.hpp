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

#ifndef FDCP_SOLVER_HPP
#define FDCP_SOLVER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fdcp/interval_var.hpp"
#include "fdcp/propagation.hpp"
#include "fdcp/trail.hpp"

namespace fdcp {

// Owns the trail, the propagation queue, the variables, and the registered
// propagators of one problem instance. Single-shot: build the model, add
// the propagators, then hand it to a Search. Distinct solvers are fully
// independent.
class Solver {
 public:
  Solver() = default;
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  // Creates a variable owned by the solver. The reference stays valid for
  // the solver's lifetime.
  IntervalVar& makeVar(std::int64_t initMin, std::int64_t initMax, std::string name = {});

  // Registers a propagator and runs its initial filtering. Returns the
  // init() result; false marks the solver failed at the root (the problem
  // is infeasible before search starts). Call before search only.
  bool add(std::unique_ptr<Propagator> propagator);

  // Runs the propagation queue to fixpoint. False iff a conflict occurred
  // or the solver failed at the root.
  bool propagate();

  bool failedAtRoot() const noexcept { return rootFailed_; }

  Trail& trail() noexcept { return trail_; }
  PropagationQueue& queue() noexcept { return queue_; }

 private:
  Trail trail_;
  PropagationQueue queue_;
  std::vector<std::unique_ptr<IntervalVar>> vars_;
  std::vector<std::unique_ptr<Propagator>> propagators_;
  bool rootFailed_ = false;
};

}  // namespace fdcp

#endif  // FDCP_SOLVER_HPP
