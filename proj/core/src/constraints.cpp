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

#include "fdcp/constraints.hpp"

namespace fdcp {

bool LowerEqual::init() {
  if (!propagate()) return false;
  x_.watchMin(*this);
  y_.watchMax(*this);
  return true;
}

bool LowerEqual::propagate() {
  if (!x_.updateMax(y_.max())) return false;
  if (!y_.updateMin(x_.min())) return false;
  return true;
}

bool NotEqualOffset::init() {
  if (!propagate()) return false;
  x_.watchMin(*this);
  x_.watchMax(*this);
  y_.watchMin(*this);
  y_.watchMax(*this);
  return true;
}

bool NotEqualOffset::propagate() {
  if (x_.isAssigned() && y_.isAssigned()) {
    return x_.min() + a_ != y_.min() + b_;
  }
  if (x_.isAssigned()) {
    // y may take any value except x + a - b.
    const std::int64_t forbidden = x_.min() + a_ - b_;
    if (forbidden == y_.min()) return y_.updateMin(forbidden + 1);
    if (forbidden == y_.max()) return y_.updateMax(forbidden - 1);
  } else if (y_.isAssigned()) {
    const std::int64_t forbidden = y_.min() + b_ - a_;
    if (forbidden == x_.min()) return x_.updateMin(forbidden + 1);
    if (forbidden == x_.max()) return x_.updateMax(forbidden - 1);
  }
  return true;
}

}  // namespace fdcp
