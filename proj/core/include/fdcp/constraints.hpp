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

#ifndef FDCP_CONSTRAINTS_HPP
#define FDCP_CONSTRAINTS_HPP

#include <cstdint>

#include "fdcp/interval_var.hpp"
#include "fdcp/propagation.hpp"

namespace fdcp {

// Enforces x <= y with bounds consistency: max(x) is kept <= max(y) and
// min(y) >= min(x). Only a growing min(x) or a shrinking max(y) can enable
// further filtering, so those are the only watched events.
class LowerEqual final : public Propagator {
 public:
  LowerEqual(IntervalVar& x, IntervalVar& y) : x_(x), y_(y) {}

  bool init() override;
  bool propagate() override;

 private:
  IntervalVar& x_;
  IntervalVar& y_;
};

// Enforces x + a != y + b. Interval domains cannot represent holes, so the
// propagator only shaves a bound once the other side is assigned; interior
// forbidden values are left for the search to rule out.
class NotEqualOffset final : public Propagator {
 public:
  NotEqualOffset(IntervalVar& x, IntervalVar& y, std::int64_t a = 0, std::int64_t b = 0)
      : x_(x), y_(y), a_(a), b_(b) {}

  bool init() override;
  bool propagate() override;

 private:
  IntervalVar& x_;
  IntervalVar& y_;
  std::int64_t a_;
  std::int64_t b_;
};

}  // namespace fdcp

#endif  // FDCP_CONSTRAINTS_HPP
