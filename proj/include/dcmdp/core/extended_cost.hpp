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

#include <compare>
#include <iosfwd>
#include <string>

namespace dcmdp {

/// A cost in R ∪ {+∞}. Infinity is an explicit tag, so arithmetic saturates
/// exactly instead of relying on a large sentinel.
class ExtendedCost {
public:
    constexpr ExtendedCost() noexcept = default;
    constexpr ExtendedCost(double value) noexcept : value_(value) {} // NOLINT: finite by construction

    static constexpr ExtendedCost infinity() noexcept {
        ExtendedCost c;
        c.infinite_ = true;
        return c;
    }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    constexpr bool is_finite() const noexcept { return !infinite_; }

    /// Only meaningful for finite costs.
    constexpr double value() const noexcept { return value_; }

    friend constexpr ExtendedCost operator+(ExtendedCost a, ExtendedCost b) noexcept {
        if (a.infinite_ || b.infinite_) return infinity();
        return ExtendedCost(a.value_ + b.value_);
    }

    friend constexpr bool operator==(ExtendedCost a, ExtendedCost b) noexcept {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }

    friend constexpr std::partial_ordering operator<=>(ExtendedCost a, ExtendedCost b) noexcept {
        if (a.infinite_ && b.infinite_) return std::partial_ordering::equivalent;
        if (a.infinite_) return std::partial_ordering::greater;
        if (b.infinite_) return std::partial_ordering::less;
        return a.value_ <=> b.value_;
    }

private:
    double value_ = 0.0;
    bool infinite_ = false;
};

inline constexpr ExtendedCost kInfiniteCost = ExtendedCost::infinity();

/// χ_p: zero when the predicate holds, +∞ otherwise.
constexpr ExtendedCost characteristic(bool predicate) noexcept {
    return predicate ? ExtendedCost(0.0) : kInfiniteCost;
}

constexpr ExtendedCost min(ExtendedCost a, ExtendedCost b) noexcept { return b < a ? b : a; }
constexpr ExtendedCost max(ExtendedCost a, ExtendedCost b) noexcept { return a < b ? b : a; }

std::string to_string(ExtendedCost cost);
std::ostream& operator<<(std::ostream& os, ExtendedCost cost);

} // namespace dcmdp
