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

#include "dcmdp/core/extended_cost.hpp"
#include "dcmdp/rounding/value_grid.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dcmdp {

/// Ĉ_h(s, d) for h = 0..H over the demand indices of a grid. Layer H holds
/// the terminal cost χ{v <= 0}.
class CostTable {
public:
    CostTable() = default;
    CostTable(int horizon, int num_states, std::size_t num_demands)
        : horizon_(horizon), num_states_(num_states), num_demands_(num_demands),
          data_(static_cast<std::size_t>(horizon + 1) * num_states * num_demands, kInfiniteCost) {}

    int horizon() const noexcept { return horizon_; }
    int num_states() const noexcept { return num_states_; }
    std::size_t num_demands() const noexcept { return num_demands_; }

    ExtendedCost& at(int h, int s, std::size_t d) noexcept { return data_[offset(h, s) + d]; }
    ExtendedCost at(int h, int s, std::size_t d) const noexcept { return data_[offset(h, s) + d]; }

    std::span<const ExtendedCost> row(int h, int s) const noexcept {
        return {data_.data() + offset(h, s), num_demands_};
    }
    std::span<ExtendedCost> row(int h, int s) noexcept {
        return {data_.data() + offset(h, s), num_demands_};
    }

    friend bool operator==(const CostTable&, const CostTable&) = default;

private:
    std::size_t offset(int h, int s) const noexcept {
        return (static_cast<std::size_t>(h) * num_states_ + s) * num_demands_;
    }

    int horizon_ = 0;
    int num_states_ = 0;
    std::size_t num_demands_ = 0;
    std::vector<ExtendedCost> data_;
};

/// Deterministic policy on augmented states (h, s, demand index): an action
/// and one future demand index per successor state. Entries whose cost is
/// infinite have no admissible action and are left empty.
class AugmentedPolicy {
public:
    AugmentedPolicy(ValueGrid grid, int horizon, int num_states);

    const ValueGrid& grid() const noexcept { return grid_; }
    int horizon() const noexcept { return horizon_; }
    int num_states() const noexcept { return num_states_; }
    std::size_t num_demands() const noexcept { return num_demands_; }

    bool has_entry(int h, int s, std::size_t d) const noexcept { return actions_[slot(h, s, d)] >= 0; }
    /// -1 when empty.
    int action(int h, int s, std::size_t d) const noexcept { return actions_[slot(h, s, d)]; }
    std::span<const std::uint32_t> next_demands(int h, int s, std::size_t d) const noexcept {
        return {next_.data() + slot(h, s, d) * num_states_, static_cast<std::size_t>(num_states_)};
    }

    void set(int h, int s, std::size_t d, int action, std::span<const std::uint32_t> next_demands);
    void clear(int h, int s, std::size_t d) noexcept { actions_[slot(h, s, d)] = -1; }

private:
    std::size_t slot(int h, int s, std::size_t d) const noexcept {
        return (static_cast<std::size_t>(h) * num_states_ + s) * num_demands_ + d;
    }

    ValueGrid grid_;
    int horizon_;
    int num_states_;
    std::size_t num_demands_;
    std::vector<std::int32_t> actions_;
    std::vector<std::uint32_t> next_;
};

} // namespace dcmdp
