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

#include "dcmdp/core/cmdp.hpp"

#include "dcmdp/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dcmdp {

namespace {

constexpr double kRowTolerance = 1e-9;

} // namespace

CMdp::CMdp(int num_states, int num_actions, int horizon, int initial_state,
           std::vector<double> transitions, std::vector<double> rewards, std::vector<double> costs)
    : num_states_(num_states), num_actions_(num_actions), horizon_(horizon),
      initial_state_(initial_state), transitions_(std::move(transitions)),
      rewards_(std::move(rewards)), costs_(std::move(costs)) {
    if (num_states <= 0 || num_actions <= 0 || horizon <= 0)
        throw Error(ErrorKind::InvalidModel, "dimensions must be positive");
    if (initial_state < 0 || initial_state >= num_states)
        throw Error(ErrorKind::InvalidModel,
                    "initial state " + std::to_string(initial_state) + " out of range");

    const std::size_t rows = static_cast<std::size_t>(horizon) * num_states * num_actions;
    if (rewards_.size() != rows || costs_.size() != rows)
        throw Error(ErrorKind::InvalidModel, "reward/cost table has wrong size");
    if (transitions_.size() != rows * num_states)
        throw Error(ErrorKind::InvalidModel, "transition table has wrong size");

    for (std::size_t row = 0; row < rows; ++row) {
        double total = 0.0;
        for (int t = 0; t < num_states; ++t) {
            const double p = transitions_[row * num_states + t];
            if (!std::isfinite(p) || p < 0.0)
                throw Error(ErrorKind::InvalidModel, "negative or non-finite probability");
            total += p;
        }
        if (std::abs(total - 1.0) > kRowTolerance)
            throw Error(ErrorKind::InvalidModel,
                        "transition row " + std::to_string(row) + " sums to " +
                            std::to_string(total));
    }
    for (std::size_t row = 0; row < rows; ++row) {
        if (!std::isfinite(rewards_[row]) || !std::isfinite(costs_[row]))
            throw Error(ErrorKind::InvalidModel, "non-finite reward or cost");
    }

    r_max_ = 0.0;
    r_min_ = std::numeric_limits<double>::infinity();
    for (double r : rewards_) {
        r_max_ = std::max(r_max_, std::abs(r));
        r_min_ = std::min(r_min_, r);
        if (r > 0.0 && (!r_min_positive_ || r < *r_min_positive_)) r_min_positive_ = r;
    }
    p_min_ = 1.0;
    for (double p : transitions_)
        if (p > 0.0) p_min_ = std::min(p_min_, p);
}

int CMdp::max_support(int h) const noexcept {
    int best = 0;
    for (int s = 0; s < num_states_; ++s) {
        for (int a = 0; a < num_actions_; ++a) {
            const auto row = transition(h, s, a);
            best = std::max(best, static_cast<int>(std::count_if(
                                      row.begin(), row.end(), [](double p) { return p > 0.0; })));
        }
    }
    return best;
}

} // namespace dcmdp
