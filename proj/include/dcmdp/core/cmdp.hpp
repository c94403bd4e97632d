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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dcmdp {

/// Tabular finite-horizon constrained MDP.
///
/// Epochs, states and actions are 0-based. Tables are flattened row-major:
/// transitions as [h][s][a][s'], rewards and costs as [h][s][a].
class CMdp {
public:
    /// Validates shapes and probability rows (non-negative, summing to 1
    /// within 1e-9); throws Error{InvalidModel} otherwise.
    CMdp(int num_states, int num_actions, int horizon, int initial_state,
         std::vector<double> transitions, std::vector<double> rewards,
         std::vector<double> costs);

    int num_states() const noexcept { return num_states_; }
    int num_actions() const noexcept { return num_actions_; }
    int horizon() const noexcept { return horizon_; }
    int initial_state() const noexcept { return initial_state_; }

    std::span<const double> transition(int h, int s, int a) const noexcept {
        return {transitions_.data() + row_offset(h, s, a) * num_states_,
                static_cast<std::size_t>(num_states_)};
    }
    double probability(int h, int s, int a, int next) const noexcept {
        return transitions_[row_offset(h, s, a) * num_states_ + next];
    }
    double reward(int h, int s, int a) const noexcept { return rewards_[row_offset(h, s, a)]; }
    double cost(int h, int s, int a) const noexcept { return costs_[row_offset(h, s, a)]; }

    const std::vector<double>& transitions() const noexcept { return transitions_; }
    const std::vector<double>& rewards() const noexcept { return rewards_; }
    const std::vector<double>& costs() const noexcept { return costs_; }

    /// max |r|
    double r_max() const noexcept { return r_max_; }
    /// min r (signed)
    double r_min() const noexcept { return r_min_; }
    /// Smallest strictly positive reward, if any.
    std::optional<double> r_min_positive() const noexcept { return r_min_positive_; }
    /// Smallest strictly positive transition probability.
    double p_min() const noexcept { return p_min_; }

    /// Largest support size of any transition row at epoch h.
    int max_support(int h) const noexcept;

private:
    std::size_t row_offset(int h, int s, int a) const noexcept {
        return (static_cast<std::size_t>(h) * num_states_ + s) * num_actions_ + a;
    }

    int num_states_;
    int num_actions_;
    int horizon_;
    int initial_state_;
    std::vector<double> transitions_;
    std::vector<double> rewards_;
    std::vector<double> costs_;
    double r_max_ = 0.0;
    double r_min_ = 0.0;
    std::optional<double> r_min_positive_;
    double p_min_ = 1.0;
};

} // namespace dcmdp
