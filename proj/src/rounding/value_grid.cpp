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

#include "dcmdp/rounding/value_grid.hpp"

#include "dcmdp/error.hpp"
#include "dcmdp/exact_cover/value_space.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace dcmdp {

namespace {

// Absorbs representation error when v is (algebraically) an exact grid point.
constexpr double kNudge = 1e-12;
constexpr double kIdentityTolerance = 1e-9;
constexpr double kMinLogVmin = -690.7755278982137; // log(1e-300)

double grid_delta(double epsilon, const CMdp& cmdp) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw Error(ErrorKind::NonPositiveEpsilon, "epsilon must be positive, got " + std::to_string(epsilon));
    return epsilon / (cmdp.horizon() * (cmdp.num_states() + 1) + 1);
}

std::int64_t identity_key(double v) {
    if (v == 0.0) v = 0.0; // fold -0.0
    return std::bit_cast<std::int64_t>(v);
}

} // namespace

ValueGrid ValueGrid::additive(double epsilon, const CMdp& cmdp) {
    ValueGrid g;
    g.scheme_ = GridScheme::Additive;
    g.epsilon_ = epsilon;
    g.delta_ = grid_delta(epsilon, cmdp);
    g.num_states_ = cmdp.num_states();
    const double span = cmdp.horizon() * cmdp.r_max();
    g.v_min_ = -span;
    g.v_max_ = span;
    g.partial_floor_ = -2.0 * span - g.delta_ * (cmdp.num_states() + 2);

    const std::int64_t lo = g.round_down(g.v_min_).key;
    const std::int64_t hi = g.round_down(g.v_max_).key;
    g.first_key_ = lo;
    g.demands_.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t k = lo; k <= hi; ++k) g.demands_.push_back(g.point(k));
    return g;
}

ValueGrid ValueGrid::relative(double epsilon, const CMdp& cmdp, Variant variant) {
    ValueGrid g;
    g.scheme_ = GridScheme::Relative;
    g.epsilon_ = epsilon;
    g.delta_ = grid_delta(epsilon, cmdp);
    if (cmdp.r_min() < 0.0)
        throw Error(ErrorKind::NegativeRewards, "relative rounding requires non-negative rewards");
    if (g.delta_ >= 1.0)
        throw Error(ErrorKind::InvalidArgument, "relative grid needs epsilon < H(S+1)+1");
    g.num_states_ = cmdp.num_states();
    g.base_ = 1.0 / (1.0 - g.delta_);
    g.partial_floor_ = -std::numeric_limits<double>::infinity();

    const int H = cmdp.horizon();
    double log_vmin = 0.0; // all-zero rewards: any positive v_min works
    if (const auto r = cmdp.r_min_positive()) {
        log_vmin = H * std::log(cmdp.p_min()) + std::log(*r);
        if (variant == Variant::Difference) log_vmin += H * std::log1p(-g.delta_);
    }
    if (log_vmin < kMinLogVmin)
        throw Error(ErrorKind::RangeUnderflow, "relative grid v_min underflows binary64");
    // the log form only decides underflow; the direct product is more accurate
    g.v_min_ = 1.0;
    if (const auto r = cmdp.r_min_positive()) {
        g.v_min_ = std::pow(cmdp.p_min(), H) * *r;
        if (variant == Variant::Difference) g.v_min_ *= std::pow(1.0 - g.delta_, H);
    }
    g.v_max_ = H * cmdp.r_max();
    g.fill_relative_demands();
    return g;
}

ValueGrid ValueGrid::identity(std::vector<double> values, int num_states) {
    ValueGrid g;
    g.scheme_ = GridScheme::Identity;
    g.num_states_ = num_states;
    g.partial_floor_ = -std::numeric_limits<double>::infinity();
    for (double& v : values)
        if (v == 0.0) v = 0.0;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.empty()) throw Error(ErrorKind::InvalidArgument, "identity grid needs at least one value");
    g.v_min_ = values.front();
    g.v_max_ = values.back();
    g.demands_.reserve(values.size());
    for (double v : values) {
        g.identity_index_.emplace(identity_key(v), g.demands_.size());
        g.demands_.push_back(GridPoint{identity_key(v), v});
    }
    return g;
}

ValueGrid ValueGrid::restore(GridScheme scheme, double epsilon, double delta, double v_min,
                             double v_max, int num_states) {
    if (scheme == GridScheme::Identity)
        throw Error(ErrorKind::InvalidArgument, "identity grids are restored from their values");
    if (!(delta > 0.0 && delta < 1.0) || num_states <= 0 || !(v_min <= v_max || scheme == GridScheme::Relative))
        throw Error(ErrorKind::InvalidArgument, "inconsistent grid parameters");
    ValueGrid g;
    g.scheme_ = scheme;
    g.epsilon_ = epsilon;
    g.delta_ = delta;
    g.v_min_ = v_min;
    g.v_max_ = v_max;
    g.num_states_ = num_states;
    if (scheme == GridScheme::Additive) {
        g.partial_floor_ = -2.0 * v_max - delta * (num_states + 2);
        const std::int64_t lo = g.round_down(v_min).key;
        const std::int64_t hi = g.round_down(v_max).key;
        g.first_key_ = lo;
        for (std::int64_t k = lo; k <= hi; ++k) g.demands_.push_back(g.point(k));
    } else {
        if (!(v_min > 0.0)) throw Error(ErrorKind::InvalidArgument, "relative v_min must be positive");
        g.base_ = 1.0 / (1.0 - delta);
        g.partial_floor_ = -std::numeric_limits<double>::infinity();
        g.fill_relative_demands();
    }
    return g;
}

void ValueGrid::fill_relative_demands() {
    // Everything round_down can return for a value in [0, v_max].
    demands_.push_back(GridPoint{kZeroKey, 0.0});
    const std::int64_t hi = round_down(v_max_).key;
    for (std::int64_t k = 0; k <= hi; ++k) demands_.push_back(point(k));
}

GridPoint ValueGrid::point(std::int64_t key) const {
    switch (scheme_) {
    case GridScheme::Identity: return GridPoint{key, std::bit_cast<double>(key)};
    case GridScheme::Additive: return GridPoint{key, static_cast<double>(key) * delta_};
    case GridScheme::Relative:
        if (key == kZeroKey) return GridPoint{kZeroKey, 0.0};
        return GridPoint{key, v_min_ * std::pow(base_, static_cast<double>(key))};
    }
    return {};
}

GridPoint ValueGrid::round_down(double v) const {
    if (std::isnan(v)) throw Error(ErrorKind::OutOfRange, "cannot round NaN");
    switch (scheme_) {
    case GridScheme::Identity: return GridPoint{identity_key(v), v == 0.0 ? 0.0 : v};
    case GridScheme::Additive: {
        if (v < partial_floor_ || !std::isfinite(v))
            throw Error(ErrorKind::OutOfRange,
                        std::to_string(v) + " is below the additive grid floor " +
                            std::to_string(partial_floor_));
        const double slack = kNudge * std::max(std::abs(v), delta_);
        auto k = static_cast<std::int64_t>(std::floor(v / delta_));
        while (static_cast<double>(k + 1) * delta_ <= v + slack) ++k;
        while (static_cast<double>(k) * delta_ > v + slack) --k;
        return point(k);
    }
    case GridScheme::Relative: {
        if (!std::isfinite(v)) throw Error(ErrorKind::OutOfRange, "cannot round a non-finite value");
        const double bound = v * (1.0 + kNudge);
        if (!(bound >= v_min_)) return GridPoint{kZeroKey, 0.0};
        auto k = static_cast<std::int64_t>(std::floor(std::log(v / v_min_) / std::log(base_)));
        k = std::max<std::int64_t>(k, 0);
        while (point(k + 1).value <= bound) ++k;
        while (k >= 0 && point(k).value > bound) --k;
        return k < 0 ? GridPoint{kZeroKey, 0.0} : point(k);
    }
    }
    return {};
}

double ValueGrid::kappa(double v) const noexcept {
    switch (scheme_) {
    case GridScheme::Identity: return v;
    case GridScheme::Additive: return v - delta_ * (num_states_ + 1);
    case GridScheme::Relative: return v * std::pow(1.0 - delta_, num_states_ + 1);
    }
    return v;
}

bool ValueGrid::covers(const GridPoint& partial, const GridPoint& demand) const noexcept {
    switch (scheme_) {
    case GridScheme::Identity:
        return partial.value >=
               demand.value - kIdentityTolerance * std::max(1.0, std::abs(demand.value));
    case GridScheme::Additive: return partial.key >= demand.key - (num_states_ + 1);
    case GridScheme::Relative:
        return demand.key == kZeroKey ||
               (partial.key != kZeroKey && partial.key >= demand.key - (num_states_ + 1));
    }
    return false;
}

bool ValueGrid::within(const GridPoint& diff, double reward) const {
    switch (scheme_) {
    case GridScheme::Identity:
        return diff.value <= reward + kIdentityTolerance * std::max(1.0, std::abs(reward));
    case GridScheme::Additive: return diff.key <= round_down(reward).key + 1;
    case GridScheme::Relative: return diff.key == kZeroKey || diff.key <= round_down(reward).key;
    }
    return false;
}

std::optional<std::size_t> ValueGrid::demand_index(const GridPoint& p) const noexcept {
    switch (scheme_) {
    case GridScheme::Identity: {
        const auto it = identity_index_.find(p.key);
        if (it == identity_index_.end()) return std::nullopt;
        return it->second;
    }
    case GridScheme::Additive: {
        const std::int64_t i = p.key - first_key_;
        if (i < 0 || i >= static_cast<std::int64_t>(demands_.size())) return std::nullopt;
        return static_cast<std::size_t>(i);
    }
    case GridScheme::Relative: {
        const std::int64_t i = p.key + 1;
        if (i < 0 || i >= static_cast<std::int64_t>(demands_.size())) return std::nullopt;
        return static_cast<std::size_t>(i);
    }
    }
    return std::nullopt;
}

ValueGrid build_grid(GridScheme scheme, double epsilon, const CMdp& cmdp, Variant variant) {
    switch (scheme) {
    case GridScheme::Additive: return ValueGrid::additive(epsilon, cmdp);
    case GridScheme::Relative: return ValueGrid::relative(epsilon, cmdp, variant);
    case GridScheme::Identity: return ValueGrid::identity(value_space(cmdp).all, cmdp.num_states());
    }
    throw Error(ErrorKind::InvalidArgument, "unknown grid scheme");
}

} // namespace dcmdp
