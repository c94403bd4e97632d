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

#pragma once

#include "dcmdp/core/cmdp.hpp"

#include <cstddef>
#include <vector>

namespace dcmdp {

/// Values achievable by some deterministic policy from each (h, s), h = 0..H.
/// Layer H is {0}. Includes values of histories the policy never reaches.
struct ValueSpace {
    int horizon = 0;
    int num_states = 0;
    std::vector<std::vector<double>> layers; // [h * S + s], ascending
    std::vector<double> all;                 // ascending union

    const std::vector<double>& at(int h, int s) const {
        return layers[static_cast<std::size_t>(h) * num_states + s];
    }
};

inline constexpr std::size_t kDefaultValueCap = 1'000'000;

/// Backward enumeration of r + Σ_t p_t v_t, summed left to right and
/// deduplicated with exact binary64 equality. Throws CapExceeded when any
/// set (or the enumeration work for one (h, s, a)) exceeds `cap`.
ValueSpace value_space(const CMdp& cmdp, std::size_t cap = kDefaultValueCap);

} // namespace dcmdp
