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
#include "dcmdp/rounding/value_grid.hpp"

#include <cstdint>
#include <vector>

namespace dcmdp {

/// Reachable rounded partial sums (or differences) for one (h, s, a).
///
/// layers[t] holds the positions entering successor t, ascending by value;
/// layers[S] is the final layer checked against the base case. Successor t
/// offers choices() demand indices (all demands, or just index 0 when
/// P(t|s,a) = 0), and links[t][i * choices(t) + j] is the position in
/// layers[t + 1] reached from layers[t][i] by choosing demand j.
struct PartialSumTable {
    Variant variant = Variant::Sum;
    std::vector<std::vector<GridPoint>> layers;
    std::vector<std::uint32_t> num_choices;
    std::vector<std::vector<std::uint32_t>> links;

    std::uint32_t choices(int t) const noexcept { return num_choices[t]; }
    std::uint32_t link(int t, std::size_t i, std::uint32_t j) const noexcept {
        return links[t][i * num_choices[t] + j];
    }
};

inline constexpr std::size_t kDefaultLinkCap = std::size_t{1} << 27;

/// Forward pass over successors. Sum variant starts from {r_h(s,a)} and
/// advances by round(u + p v); difference variant starts from every demand
/// and retreats by round(u - p v). Throws CapExceeded past `link_cap` links.
PartialSumTable input_sets(int h, int s, int a, const ValueGrid& grid, const CMdp& cmdp,
                           Variant variant, std::size_t link_cap = kDefaultLinkCap);

} // namespace dcmdp
