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

#ifndef FDCP_PROPAGATION_HPP
#define FDCP_PROPAGATION_HPP

#include <cstddef>
#include <deque>

namespace fdcp {

// A filtering procedure. There is no constraint object: a constraint is
// implicitly defined by the set of propagators that enforce its relation.
//
// init() performs the initial filtering and registers the propagator on
// the variable events it must react to. propagate() runs the filtering
// procedure. Both return false iff filtering emptied a domain.
class Propagator {
 public:
  virtual ~Propagator() = default;
  virtual bool init() = 0;
  virtual bool propagate() = 0;

  // True iff the propagator currently sits in the propagation queue.
  // Maintained by PropagationQueue.
  bool enqueued = false;
};

// FIFO queue of propagators awaiting propagation. A propagator is never
// queued twice at the same time.
class PropagationQueue {
 public:
  void enqueue(Propagator& propagator) {
    if (!propagator.enqueued) {
      propagator.enqueued = true;
      queue_.push_back(&propagator);
    }
  }

  // Runs queued propagators to fixpoint. Filtering stops at the first
  // conflict, but the queue is always fully drained so that every
  // enqueued flag is reset. Returns false iff a conflict occurred.
  bool propagate() {
    bool noConflict = true;
    while (!queue_.empty()) {
      Propagator* propagator = queue_.front();
      queue_.pop_front();
      if (noConflict) noConflict = propagator->propagate();
      propagator->enqueued = false;
    }
    return noConflict;
  }

  bool empty() const noexcept { return queue_.empty(); }
  std::size_t size() const noexcept { return queue_.size(); }

 private:
  std::deque<Propagator*> queue_;
};

}  // namespace fdcp

#endif  // FDCP_PROPAGATION_HPP
