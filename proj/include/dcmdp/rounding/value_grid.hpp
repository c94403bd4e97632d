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

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace dcmdp {

enum class GridScheme { Identity, Additive, Relative };

/// Which Bellman recursion a grid is built for. The relative difference
/// recursion needs a smaller v_min.
enum class Variant { Sum, Difference };

/// A representable value. `key` is canonical: the multiple of δ (additive),
/// the geometric exponent with -1 for the zero point (relative), or the bit
/// pattern of the value (identity).
struct GridPoint {
    std::int64_t key = 0;
    double value = 0.0;

    friend bool operator==(const GridPoint& a, const GridPoint& b) noexcept {
        return a.key == b.key;
    }
};

class ValueGrid {
public:
    static constexpr std::int64_t kZeroKey = -1;

    /// δ = ε/(H(S+1)+1), demands are the multiples of δ in [round(-H r_max), round(H r_max)].
    static ValueGrid additive(double epsilon, const CMdp& cmdp);
    /// Geometric grid {0} ∪ {v_min/(1-δ)^k}. Throws NegativeRewards, RangeUnderflow.
    static ValueGrid relative(double epsilon, const CMdp& cmdp, Variant variant = Variant::Sum);
    /// Exact grid on an explicit value set (deduplicated, sorted).
    static ValueGrid identity(std::vector<double> values, int num_states);
    /// Rebuilds an additive or relative grid from its stored parameters.
    static ValueGrid restore(GridScheme scheme, double epsilon, double delta, double v_min,
                             double v_max, int num_states);

    GridScheme scheme() const noexcept { return scheme_; }
    double epsilon() const noexcept { return epsilon_; }
    double delta() const noexcept { return delta_; }
    double v_min() const noexcept { return v_min_; }
    double v_max() const noexcept { return v_max_; }
    int num_states() const noexcept { return num_states_; }

    /// Largest grid point <= v. Relative grids send everything below v_min
    /// (negatives included) to the zero point. Additive grids throw
    /// OutOfRange below the partial-sum floor.
    GridPoint round_down(double v) const;

    /// Grid point for a canonical key.
    GridPoint point(std::int64_t key) const;

    double kappa(double v) const noexcept;

    GridPoint advance(const GridPoint& u, double p, double v) const { return round_down(u.value + p * v); }
    GridPoint retreat(const GridPoint& u, double p, double v) const { return round_down(u.value - p * v); }

    /// Rounded partial sum meets the relaxed bound: partial >= κ(demand).
    bool covers(const GridPoint& partial, const GridPoint& demand) const noexcept;
    /// Rounded difference meets the relaxed reward bound (difference recursion).
    bool within(const GridPoint& diff, double reward) const;

    /// Demand domain, ascending.
    const std::vector<GridPoint>& demands() const noexcept { return demands_; }
    std::optional<std::size_t> demand_index(const GridPoint& p) const noexcept;

    /// Lowest value round_down accepts (additive only; -inf otherwise).
    double partial_floor() const noexcept { return partial_floor_; }

private:
    ValueGrid() = default;
    void fill_relative_demands();

    GridScheme scheme_ = GridScheme::Identity;
    double epsilon_ = 0.0;
    double delta_ = 0.0;
    double v_min_ = 0.0;
    double v_max_ = 0.0;
    double partial_floor_ = 0.0;
    double base_ = 1.0; // 1/(1-δ)
    int num_states_ = 1;
    std::int64_t first_key_ = 0; // additive: key of demands_[0]
    std::vector<GridPoint> demands_;
    std::unordered_map<std::int64_t, std::size_t> identity_index_;
};

ValueGrid build_grid(GridScheme scheme, double epsilon, const CMdp& cmdp,
                     Variant variant = Variant::Sum);

} // namespace dcmdp
