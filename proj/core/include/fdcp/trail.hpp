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

#ifndef FDCP_TRAIL_HPP
#define FDCP_TRAIL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fdcp {

// An undoable record of one state mutation. Stateful objects push one of
// these onto the trail for every change that must be reverted on backtrack;
// undo() restores the owner to its value at store time. The trail never
// calls undo() twice for the same stored entry.
class Change {
 public:
  virtual ~Change() = default;
  virtual void undo() = 0;
};

// Chronological record of undoable changes plus a stack of node boundaries
// (trail sizes). Backtracking to a node undoes every change above the
// node's boundary in LIFO order.
//
// Stored Change objects are not owned and must outlive the trail entries
// that reference them. A trail and all objects registered on it form one
// single-threaded mutation domain.
class Trail {
 public:
  Trail() = default;
  Trail(const Trail&) = delete;
  Trail& operator=(const Trail&) = delete;

  // Pushes the change on top of the trail.
  void store(Change& change) { changes_.push_back(&change); }

  // Marks the beginning of a new node and opens a fresh timestamp epoch.
  void newNode() {
    boundaries_.push_back(changes_.size());
    ++timestamp_;
    ++newNodeCount_;
  }

  // Restores the previous node; no-op on the root state.
  void undoNode() {
    if (!boundaries_.empty()) {
      const std::size_t boundary = boundaries_.back();
      boundaries_.pop_back();
      ++undoneNodeCount_;
      undoUntil(boundary);
    }
  }

  // Restores the root state: undoes every change and clears all boundaries.
  void undoAll() {
    undoneNodeCount_ += boundaries_.size();
    boundaries_.clear();
    undoUntil(0);
  }

  std::size_t size() const noexcept { return changes_.size(); }
  std::size_t depth() const noexcept { return boundaries_.size(); }
  const std::vector<std::size_t>& nodeBoundaries() const noexcept { return boundaries_; }

  // One value per state epoch. Epochs advance at newNode and after every
  // restoration, so a stateful object that compares its last-stored
  // timestamp against this counter stores at most one entry per epoch.
  std::int64_t timestamp() const noexcept { return timestamp_; }

  std::uint64_t newNodeCount() const noexcept { return newNodeCount_; }
  std::uint64_t undoneNodeCount() const noexcept { return undoneNodeCount_; }

 private:
  void undoUntil(std::size_t targetSize) {
    while (changes_.size() > targetSize) {
      Change* change = changes_.back();
      changes_.pop_back();
      change->undo();
    }
    ++timestamp_;
  }

  std::vector<Change*> changes_;
  std::vector<std::size_t> boundaries_;
  std::int64_t timestamp_ = 0;
  std::uint64_t newNodeCount_ = 0;
  std::uint64_t undoneNodeCount_ = 0;
};

// A reversible 64-bit integer. Writes inside a node are trailed at most
// once (the first write of each epoch), so backtracking restores the value
// the object held when the node began. The object is its own Change entry;
// it must therefore outlive the owning trail's use of it and cannot be
// copied or moved.
//
// Values are plain int64 with no overflow checks.
class TrailedInt final : public Change {
 public:
  TrailedInt(Trail& trail, std::int64_t initValue) : trail_(trail), current_(initValue) {}
  TrailedInt(const TrailedInt&) = delete;
  TrailedInt& operator=(const TrailedInt&) = delete;

  std::int64_t value() const noexcept { return current_; }

  void setValue(std::int64_t value) {
    if (value == current_) return;
    if (lastStored_ < trail_.timestamp()) {
      oldValues_.push_back(current_);
      lastStored_ = trail_.timestamp();
      trail_.store(*this);
    }
    current_ = value;
  }

  void undo() override {
    current_ = oldValues_.back();
    oldValues_.pop_back();
  }

 private:
  Trail& trail_;
  std::int64_t current_;
  std::vector<std::int64_t> oldValues_;
  std::int64_t lastStored_ = -1;  // epoch of the latest trail entry
};

}  // namespace fdcp

#endif  // FDCP_TRAIL_HPP
