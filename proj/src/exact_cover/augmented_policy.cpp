// Copyright 2026 The dcmdp Authors
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

#include "dcmdp/exact_cover/augmented_policy.hpp"

#include "dcmdp/error.hpp"

#include <algorithm>

namespace dcmdp {

AugmentedPolicy::AugmentedPolicy(ValueGrid grid, int horizon, int num_states)
    : grid_(std::move(grid)), horizon_(horizon), num_states_(num_states),
      num_demands_(grid_.demands().size()),
      actions_(static_cast<std::size_t>(horizon) * num_states * num_demands_, -1),
      next_(actions_.size() * num_states, 0) {}

void AugmentedPolicy::set(int h, int s, std::size_t d, int action,
                          std::span<const std::uint32_t> next_demands) {
    if (next_demands.size() != static_cast<std::size_t>(num_states_))
        throw Error(ErrorKind::DimensionMismatch, "demand vector length differs from S");
    const std::size_t i = slot(h, s, d);
    actions_[i] = action;
    std::copy(next_demands.begin(), next_demands.end(), next_.begin() + i * num_states_);
}

} // namespace dcmdp
